#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfpow/clutter.hpp"
#include "sfpow/ideal.hpp"

namespace sfpow {

/// Edge ideal of the cycle on n >= 3 vertices.
MonomialIdeal cycle_ideal(std::size_t n);
/// Edge ideal of the path on n >= 2 vertices.
MonomialIdeal path_ideal(std::size_t n);
/// Edge ideal of the complete bipartite graph K_{a,b}.
MonomialIdeal complete_bipartite_ideal(std::size_t a, std::size_t b);
/// (x_1, ..., x_k) in k variables.
MonomialIdeal variable_ideal(std::size_t k);

/// Named fixtures: c3, c4, c5, c7, path3, path4, k23, edge, prime2, prime3.
MonomialIdeal fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace sfpow

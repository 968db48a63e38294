#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"
#include "sfpow/betti.hpp"
#include "sfpow/clutter.hpp"
#include "sfpow/equality.hpp"
#include "sfpow/ideal.hpp"

namespace sfpow::io {

using Json = nlohmann::ordered_json;

/// {"vars": d, "generators": [[e1,...,ed], ...]}
MonomialIdeal ideal_from_json(const Json& j);
Json to_json(const MonomialIdeal& ideal);

/// {"vertices": n, "edges": [[1,2],[2,3]]}, 1-based.
Clutter clutter_from_json(const Json& j);
Json to_json(const Clutter& clutter);

/// Keys "i,b" with b rendered as a monomial, e.g. "1,x1*x2*x3".
Json to_json(const BettiTable& table);
Json to_json(const EqualityReport& report);

/// Comma- or newline-separated monomials such as "x1*x2, x2*x3".
MonomialIdeal parse_ideal_text(std::string_view text, std::size_t vars);

std::string read_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);

/// Either kind of input file, distinguished by its keys.
std::variant<MonomialIdeal, Clutter> load_ideal_or_clutter(const std::filesystem::path& path);
MonomialIdeal load_ideal(const std::filesystem::path& path);
Clutter load_clutter(const std::filesystem::path& path);

}  // namespace sfpow::io

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfpow/betti.hpp"
#include "sfpow/ideal.hpp"

namespace sfpow {

/// a-invariant value; std::nullopt stands for -infinity (vanishing local
/// cohomology).
using AInvariant = std::optional<long>;

struct SummaryOptions {
  /// Ideals with more minimal generators are refused with BudgetExceeded.
  std::size_t max_generators = 40;
};

/// Homological invariants of R/J.
struct HomologicalSummary {
  std::size_t vars = 0;
  /// Krull dimension of R/J.
  std::size_t dim = 0;
  /// From the Betti table.
  long reg = 0;
  int pd = 0;
  int depth = 0;
  /// a_i(R/J) for 0 <= i <= dim, via graded local duality.
  std::vector<AInvariant> a_invariants;
  std::uint64_t alpha = 0;
  /// max{a_i + i}; must equal reg.
  long reg_from_local_cohomology = 0;
  /// min{i : a_i finite}; must equal depth.
  int depth_from_local_cohomology = 0;
  BettiTable betti;
  /// Betti numbers read from the constructed minimal resolution.
  BettiTable resolution_betti;

  bool consistent() const {
    return reg == reg_from_local_cohomology && depth == depth_from_local_cohomology &&
           betti == resolution_betti;
  }
};

HomologicalSummary summary(const MonomialIdeal& ideal, unsigned field_char = 0, const SummaryOptions& options = {});

/// Renders an a-invariant as an integer or "-inf".
std::string format_a_invariant(const AInvariant& a);

}  // namespace sfpow

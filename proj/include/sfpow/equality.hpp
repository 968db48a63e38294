#pragma once

#include <optional>
#include <vector>

#include "sfpow/ideal.hpp"

namespace sfpow {

struct PowerCheck {
  unsigned n = 0;
  bool equal = true;
  /// A minimal generator of I^(n) outside I^n when equal is false.
  std::optional<Monomial> witness;
};

/// Decides I^n == I^(n) by testing each minimal generator of I^(n) against I^n.
PowerCheck powers_equal(const MonomialIdeal& ideal, unsigned n);

struct EqualityReport {
  std::size_t mu = 0;
  /// ceil(mu / 2): the last n the finite criterion needs.
  unsigned checked_up_to = 0;
  /// n = 1..checked_up_to, consecutive.
  std::vector<PowerCheck> per_n;
  std::optional<PowerCheck> first_failure;
  /// True iff every entry of per_n is equal; then I^n == I^(n) for all n.
  bool verdict_all_n = true;
  /// Optional direct checks for n = checked_up_to+1..extended_to, outside the
  /// criterion range. Empty unless requested.
  std::vector<PowerCheck> extended;
};

/// Runs powers_equal for n = 1..ceil(mu/2). When `extend_to` exceeds that
/// range the extra n are checked directly and reported under `extended`.
EqualityReport equal_all_powers(const MonomialIdeal& ideal, unsigned extend_to = 0);

/// ceil(mu(I) / 2).
unsigned equality_bound(const MonomialIdeal& ideal);

}  // namespace sfpow

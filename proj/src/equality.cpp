#include "sfpow/equality.hpp"

#include <algorithm>

#include "sfpow/error.hpp"

namespace sfpow {

PowerCheck powers_equal(const MonomialIdeal& ideal, unsigned n) {
  require_theorem_domain(ideal, "powers_equal");
  if (n == 0) throw DomainError("powers_equal needs n >= 1");
  PowerCheck out;
  out.n = n;
  // I^n ⊆ I^(n) always holds, so only the reverse inclusion is tested.
  out.witness = first_generator_outside(symbolic_power(ideal, n), power(ideal, n));
  out.equal = !out.witness.has_value();
  return out;
}

unsigned equality_bound(const MonomialIdeal& ideal) {
  return static_cast<unsigned>((ideal.mu() + 1) / 2);
}

EqualityReport equal_all_powers(const MonomialIdeal& ideal, unsigned extend_to) {
  require_theorem_domain(ideal, "equal_all_powers");
  EqualityReport report;
  report.mu = ideal.mu();
  report.checked_up_to = equality_bound(ideal);

  const unsigned last = std::max(report.checked_up_to, extend_to);
  std::vector<PowerCheck> checks(last);
  const int count = static_cast<int>(last);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) checks[k] = powers_equal(ideal, static_cast<unsigned>(k) + 1);

  for (unsigned k = 0; k < last; ++k) {
    if (k < report.checked_up_to) {
      report.per_n.push_back(checks[k]);
      if (!checks[k].equal && !report.first_failure) {
        report.first_failure = checks[k];
        report.verdict_all_n = false;
      }
    } else {
      report.extended.push_back(checks[k]);
    }
  }
  return report;
}

}  // namespace sfpow

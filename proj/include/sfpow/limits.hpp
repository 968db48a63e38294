#pragma once

#include <string>
#include <vector>

#include "sfpow/summary.hpp"

namespace sfpow {

struct LimitRow {
  unsigned n = 0;
  /// Set when the symbolic power was over budget; `summary` is then empty.
  bool skipped = false;
  std::string skip_reason;
  std::size_t generators = 0;
  HomologicalSummary summary;
  /// Every inequality with this row on the left-hand side held.
  bool checks_ok = true;
};

struct InequalityViolation {
  unsigned n = 0;
  unsigned m = 0;
  /// "depth", "a_<i>" or "alpha<=reg".
  std::string kind;
  std::string detail;
};

struct LimitExperiment {
  std::size_t dim = 0;
  std::vector<LimitRow> rows;
  std::vector<InequalityViolation> violations;
  std::size_t checks_run = 0;
  bool truncated = false;
};

/// Invariants of R/I^(n) for n = 1..n_max, plus the finite inequalities
///   depth(R/I^(n)) <= depth(R/I^(ceil(n/m)))
///   a_i(R/I^(n))   >= m * a_i(R/I^(ceil(n/m)))   (vacuous if the right side is -inf)
///   alpha(I^(n))   <= reg(R/I^(n)) + 1
/// for every pair 1 <= n, m <= n_max whose rows were computed.
LimitExperiment limit_experiment(const MonomialIdeal& ideal, unsigned n_max, unsigned field_char = 0,
                                 const SummaryOptions& options = {});

/// p/q in lowest terms.
std::string exact_ratio(long p, long q);

/// Header `n,reg,depth,a_0,...,a_dim,alpha,reg_over_n,alpha_over_n,checks`.
std::string limit_csv(const LimitExperiment& experiment);

}  // namespace sfpow

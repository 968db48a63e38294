#include "sfpow/limits.hpp"

#include <numeric>
#include <sstream>

#include "sfpow/error.hpp"

namespace sfpow {

LimitExperiment limit_experiment(const MonomialIdeal& ideal, unsigned n_max, unsigned field_char,
                                 const SummaryOptions& options) {
  require_theorem_domain(ideal, "limit_experiment");
  if (n_max == 0) throw DomainError("limit_experiment needs n_max >= 1");
  LimitExperiment out;
  out.dim = ideal.vars() - height(ideal);

  for (unsigned n = 1; n <= n_max; ++n) {
    LimitRow row;
    row.n = n;
    auto power = symbolic_power(ideal, n);
    row.generators = power.mu();
    try {
      row.summary = summary(power, field_char, options);
    } catch (const BudgetExceeded& e) {
      row.skipped = true;
      row.skip_reason = e.what();
      out.truncated = true;
    }
    out.rows.push_back(std::move(row));
  }

  auto violate = [&](LimitRow& row, unsigned m, std::string kind, std::string detail) {
    row.checks_ok = false;
    out.violations.push_back(InequalityViolation{row.n, m, std::move(kind), std::move(detail)});
  };

  for (auto& row : out.rows) {
    if (row.skipped) continue;
    const auto& s = row.summary;
    ++out.checks_run;
    if (static_cast<long>(s.alpha) > s.reg + 1) {
      violate(row, 0, "alpha<=reg",
              "alpha=" + std::to_string(s.alpha) + " reg(I^(n))=" + std::to_string(s.reg + 1));
    }
    for (unsigned m = 1; m <= n_max; ++m) {
      const unsigned k = (row.n + m - 1) / m;
      const auto& base = out.rows[k - 1];
      if (base.skipped) continue;
      const auto& b = base.summary;
      ++out.checks_run;
      if (s.depth > b.depth) {
        violate(row, m, "depth", std::to_string(s.depth) + " > " + std::to_string(b.depth));
      }
      for (std::size_t i = 0; i < s.a_invariants.size(); ++i) {
        const auto& right = b.a_invariants[i];
        if (!right) continue;
        ++out.checks_run;
        const auto& left = s.a_invariants[i];
        if (!left || *left < static_cast<long>(m) * *right) {
          violate(row, m, "a_" + std::to_string(i),
                  format_a_invariant(left) + " < " + std::to_string(m) + "*" + std::to_string(*right));
        }
      }
    }
  }
  return out;
}

std::string exact_ratio(long p, long q) {
  if (q == 0) throw DomainError("exact_ratio: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const long g = std::gcd(p < 0 ? -p : p, q);
  return std::to_string(p / g) + "/" + std::to_string(q / g);
}

std::string limit_csv(const LimitExperiment& experiment) {
  std::ostringstream os;
  os << "n,reg,depth";
  for (std::size_t i = 0; i <= experiment.dim; ++i) os << ",a_" << i;
  os << ",alpha,reg_over_n,alpha_over_n,checks\n";
  for (const auto& row : experiment.rows) {
    os << row.n;
    if (row.skipped) {
      os << ",skipped";
      for (std::size_t k = 0; k < experiment.dim + 6; ++k) os << ',';
      os << "truncated\n";
      continue;
    }
    const auto& s = row.summary;
    os << ',' << s.reg << ',' << s.depth;
    for (const auto& a : s.a_invariants) os << ',' << format_a_invariant(a);
    os << ',' << s.alpha << ',' << exact_ratio(s.reg, row.n) << ','
       << exact_ratio(static_cast<long>(s.alpha), row.n) << ',' << (row.checks_ok ? "ok" : "violated") << '\n';
  }
  return os.str();
}

}  // namespace sfpow

#include "sfpow/summary.hpp"

#include <algorithm>
#include <unordered_set>

#include "sfpow/error.hpp"
#include "sfpow/resolution.hpp"

namespace sfpow {

namespace {

// gcds of nonempty subsets of `twists`, by descending total degree
std::vector<Monomial> meet_closure(const std::vector<Monomial>& twists) {
  std::unordered_set<Monomial, MonomialHash> closure;
  for (const auto& t : twists) {
    std::vector<Monomial> fresh{t};
    for (const auto& c : closure) fresh.push_back(c.gcd(t));
    for (auto& m : fresh) closure.insert(std::move(m));
  }
  std::vector<Monomial> out(closure.begin(), closure.end());
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  return out;
}

template <class Field>
void fill_local_cohomology(const Field& field, const MonomialIdeal& ideal, HomologicalSummary& out) {
  const auto res = MinimalResolution<Field>::build(field, ideal);
  out.resolution_betti = res.betti();

  std::vector<Monomial> twists;
  for (std::size_t i = 0; i <= res.length(); ++i) {
    twists.insert(twists.end(), res.twists(i).begin(), res.twists(i).end());
  }
  // Ext^j(R/J,R) in degree -m only depends on which twists lie above m, and
  // the most negative degree with a given pattern is minus a meet of twists.
  const auto candidates = meet_closure(twists);
  const long d = static_cast<long>(ideal.vars());

  out.a_invariants.assign(out.dim + 1, std::nullopt);
  for (std::size_t i = 0; i <= out.dim; ++i) {
    const std::size_t j = ideal.vars() - i;
    for (const auto& m : candidates) {
      if (res.ext_dimension(j, m) != 0) {
        // H^i_m(R/J)_k ≅ Ext^{d-i}(R/J, R)_{-k-d} dualized
        out.a_invariants[i] = static_cast<long>(m.degree()) - d;
        break;
      }
    }
  }
}

}  // namespace

HomologicalSummary summary(const MonomialIdeal& ideal, unsigned field_char, const SummaryOptions& options) {
  if (ideal.is_zero()) throw DomainError("summary: zero ideal");
  if (ideal.is_unit()) throw DomainError("summary: unit ideal");
  require_field_characteristic(field_char);
  if (ideal.mu() > options.max_generators) {
    throw BudgetExceeded("summary: " + std::to_string(ideal.mu()) + " generators exceed the budget of " +
                         std::to_string(options.max_generators));
  }

  HomologicalSummary out;
  out.vars = ideal.vars();
  out.dim = ideal.vars() - height(ideal);
  out.alpha = alpha(ideal);
  out.betti = betti_numbers(ideal, field_char);
  out.pd = out.betti.projdim_quotient();
  out.reg = out.betti.regularity_quotient();
  out.depth = static_cast<int>(ideal.vars()) - out.pd;

  if (field_char == 0) {
    fill_local_cohomology(RationalField{}, ideal, out);
  } else {
    fill_local_cohomology(PrimeField{field_char}, ideal, out);
  }

  bool have = false;
  for (std::size_t i = 0; i < out.a_invariants.size(); ++i) {
    if (!out.a_invariants[i]) continue;
    const long value = *out.a_invariants[i] + static_cast<long>(i);
    if (!have) {
      out.depth_from_local_cohomology = static_cast<int>(i);
      out.reg_from_local_cohomology = value;
      have = true;
    } else {
      out.reg_from_local_cohomology = std::max(out.reg_from_local_cohomology, value);
    }
  }
  return out;
}

std::string format_a_invariant(const AInvariant& a) { return a ? std::to_string(*a) : "-inf"; }

}  // namespace sfpow

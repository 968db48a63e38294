#include "sfpow/splitting.hpp"

#include <vector>

#include "sfpow/error.hpp"

namespace sfpow {

MonomialIdeal phi_image(const MonomialIdeal& j, Exponent m) {
  if (m == 0) throw DomainError("phi_image needs m >= 1");
  std::vector<Monomial> gens;
  gens.reserve(j.mu());
  for (const auto& g : j.generators()) gens.push_back(g.ceil_div(m));
  return MonomialIdeal::normalize(std::move(gens), j.vars());
}

LemmaStableResult verify_lemma_stable(const MonomialIdeal& ideal, unsigned n, Exponent m) {
  require_theorem_domain(ideal, "verify_lemma_stable");
  if (m == 0) throw DomainError("verify_lemma_stable needs m >= 1");
  const auto target = symbolic_power(ideal, n + 1);

  // j-loop results are gathered per index so the reported failure is the
  // smallest j regardless of scheduling.
  std::vector<std::optional<Monomial>> diffs(m);
  std::vector<char> failed(m, 0);
  const int count = static_cast<int>(m);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    const unsigned j = static_cast<unsigned>(k) + 1;
    auto image = phi_image(symbolic_power(ideal, n * m + j), m);
    if (image != target) {
      failed[k] = 1;
      auto w = first_generator_outside(image, target);
      if (!w) w = first_generator_outside(target, image);
      diffs[k] = w;
    }
  }

  LemmaStableResult out;
  for (unsigned k = 0; k < m; ++k) {
    if (failed[k]) {
      out.holds = false;
      out.failing_j = k + 1;
      out.witness = diffs[k];
      break;
    }
  }
  return out;
}

ContainmentResult mainsqfree_condition(const MonomialIdeal& ideal, Exponent m, unsigned n_max) {
  require_theorem_domain(ideal, "mainsqfree_condition");
  if (m < 2) throw DomainError("mainsqfree_condition needs m >= 2");
  const int count = static_cast<int>(n_max) + 1;
  std::vector<std::optional<Monomial>> witnesses(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    const unsigned n = static_cast<unsigned>(k);
    auto image = phi_image(power(ideal, n * m + 1), m);
    witnesses[k] = first_generator_outside(image, power(ideal, n + 1));
  }
  ContainmentResult out;
  for (int k = 0; k < count; ++k) {
    if (witnesses[k]) {
      out.holds = false;
      out.failing_n = static_cast<unsigned>(k);
      out.witness = witnesses[k];
      break;
    }
  }
  return out;
}

ContainmentResult frobenius_containment(const MonomialIdeal& ideal, unsigned n) {
  require_theorem_domain(ideal, "frobenius_containment");
  const auto ones = Monomial::indicator(ideal.vars(), VarSet::full(ideal.vars()));
  const auto target = bracket_power(power(ideal, n + 1), 2);
  const auto source = power(ideal, 2 * n + 1);
  ContainmentResult out;
  for (const auto& g : source.generators()) {
    if (!contains_monomial(target, g * ones)) {
      out.holds = false;
      out.failing_n = n;
      out.witness = g;
      break;
    }
  }
  return out;
}

}  // namespace sfpow

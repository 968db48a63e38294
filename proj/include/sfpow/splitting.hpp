#pragma once

#include <optional>

#include "sfpow/ideal.hpp"

namespace sfpow {

/// Image of J^{1/m} under the monomial splitting that keeps x^{a/m} when
/// m divides a and kills it otherwise. J is given by the integer exponents
/// a, i.e. m times the fractional exponents. The image is generated by the
/// entrywise ceiling quotients of J's generators.
MonomialIdeal phi_image(const MonomialIdeal& j, Exponent m);

struct LemmaStableResult {
  bool holds = true;
  /// Set on failure: the first j in 1..m and the first generator on which
  /// phi_image(I^(nm+j), m) and I^(n+1) differ.
  std::optional<unsigned> failing_j;
  std::optional<Monomial> witness;
};

/// Checks phi_image(I^(n*m+j), m) == I^(n+1) for every j in 1..m.
LemmaStableResult verify_lemma_stable(const MonomialIdeal& ideal, unsigned n, Exponent m);

struct ContainmentResult {
  bool holds = true;
  std::optional<unsigned> failing_n;
  std::optional<Monomial> witness;
};

/// Checks phi_image(I^(n*m+1), m) ⊆ I^(n+1) for 0 <= n <= n_max and reports
/// the smallest failing n with a witness in the image but outside I^(n+1).
ContainmentResult mainsqfree_condition(const MonomialIdeal& ideal, Exponent m, unsigned n_max);

/// x_1...x_d * I^(2n+1) ⊆ (I^(n+1))^[2], with a failing generator as witness
/// (the generator g of I^(2n+1), not the product).
ContainmentResult frobenius_containment(const MonomialIdeal& ideal, unsigned n);

}  // namespace sfpow

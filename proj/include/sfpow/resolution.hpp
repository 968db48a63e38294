#pragma once

#include <cstddef>
#include <vector>

#include "sfpow/betti.hpp"
#include "sfpow/field.hpp"
#include "sfpow/ideal.hpp"

namespace sfpow {

/// Minimal multigraded free resolution of R/J,
///
///   0 <- F_0 <- F_1 <- ... <- F_p <- 0,   F_i = ⊕ R(-t),
///
/// built degree by degree over the lcm lattice: at each lattice point b the
/// complex restricted to degree b is a finite complex of vector spaces, and
/// generators of F_{i+1} of twist b are added for a basis of the missing
/// homology at position i. The differential between generators e' (twist t')
/// and e (twist t) is c * x^(t'-t) with a scalar c; only the scalars are stored.
template <class Field>
class MinimalResolution {
 public:
  using Element = typename Field::Element;

  struct Term {
    std::size_t row;  // generator index in F_{i-1}
    Element coeff;
  };

  static MinimalResolution build(const Field& field, const MonomialIdeal& ideal);

  std::size_t vars() const { return vars_; }
  /// Index of the last nonzero module, i.e. pd(R/J).
  std::size_t length() const { return twists_.size() - 1; }
  const std::vector<Monomial>& twists(std::size_t i) const { return twists_.at(i); }
  /// Column k is d_i applied to generator k of F_i (i >= 1).
  const std::vector<std::vector<Term>>& boundary(std::size_t i) const { return boundary_.at(i); }

  /// Betti numbers of J read off the ranks of F_1, F_2, ...
  BettiTable betti() const;

  /// dim_k Ext^j(R/J, R) in multidegree -m.
  std::size_t ext_dimension(std::size_t j, const Monomial& m) const;

  /// True iff d_{i-1} ∘ d_i = 0 for every i (as monomial matrices).
  bool is_complex() const;

 private:
  std::size_t rank_between(std::size_t i, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) const;

  Field field_;
  std::size_t vars_ = 0;
  std::vector<std::vector<Monomial>> twists_;
  std::vector<std::vector<std::vector<Term>>> boundary_;

  explicit MinimalResolution(const Field& f) : field_(f) {}
};

extern template class MinimalResolution<RationalField>;
extern template class MinimalResolution<PrimeField>;

}  // namespace sfpow

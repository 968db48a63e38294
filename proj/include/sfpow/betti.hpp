#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sfpow/ideal.hpp"
#include "sfpow/simplicial.hpp"

namespace sfpow {

struct BettiEntry {
  int i = 0;
  Monomial b;
  std::size_t rank = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Multigraded Betti numbers beta_{i,b}(J) of a monomial ideal J, nonzero
/// entries only, sorted by (i, grlex b). The quotient R/J has
/// beta_{i+1,b}(R/J) = beta_{i,b}(J) and beta_{0,1}(R/J) = 1.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t vars, std::vector<BettiEntry> entries);

  std::size_t vars() const { return vars_; }
  const std::vector<BettiEntry>& entries() const { return entries_; }

  std::size_t ideal_rank(int i, const Monomial& b) const;
  std::size_t quotient_rank(int i, const Monomial& b) const;

  /// beta_{i,j}(R/J) keyed by (i, j), nonzero only.
  std::map<std::pair<int, long>, std::size_t> graded_quotient() const;
  /// Projective dimension of R/J.
  int projdim_quotient() const;
  /// max{j - i : beta_{i,j}(R/J) != 0}.
  long regularity_quotient() const;
  std::size_t total_ideal_rank() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t vars_ = 0;
  std::vector<BettiEntry> entries_;
};

/// All lcms of nonempty subsets of the generators, sorted by grlex_less.
/// Throws BudgetExceeded past `limit` points.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t limit = 2'000'000);

/// K^b(J) = {squarefree σ ⊆ supp(b) : x^(b-σ) ∈ J}.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

/// beta_{i,b}(J) = dim of reduced homology of K^b(J) in degree i-1, over
/// every b of the lcm lattice. OpenMP over lattice points.
BettiTable betti_numbers(const MonomialIdeal& ideal, unsigned field_char = 0);
/// Serial reference of betti_numbers.
BettiTable betti_numbers_serial(const MonomialIdeal& ideal, unsigned field_char = 0);

}  // namespace sfpow

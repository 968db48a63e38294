#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfpow/monomial.hpp"

namespace sfpow {

/// A monomial ideal stored as its unique minimal generating set, sorted by
/// grlex_less. Two ideals are equal iff their generator lists are equal.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// The zero ideal in `vars` variables.
  explicit MonomialIdeal(std::size_t vars = 0) : vars_(vars) {}

  /// Canonicalizes an arbitrary generating set. Throws MalformedInput if some
  /// monomial does not have `vars` entries.
  static MonomialIdeal normalize(std::vector<Monomial> gens, std::size_t vars);
  static MonomialIdeal unit(std::size_t vars);

  std::size_t vars() const { return vars_; }
  std::span<const Monomial> generators() const& { return gens_; }
  /// By value on temporaries so `for (auto& g : power(I, n).generators())` is safe.
  std::vector<Monomial> generators() && { return std::move(gens_); }
  std::size_t mu() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t vars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal bracket_power(const MonomialIdeal& ideal, Exponent m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& a);
/// a ⊆ b.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);
/// The first generator of `a` (canonical order) outside `b`, if any.
std::optional<Monomial> first_generator_outside(const MonomialIdeal& a, const MonomialIdeal& b);

bool is_squarefree(const MonomialIdeal& ideal);

/// Throws DomainError unless the ideal is square-free, nonzero and proper.
void require_theorem_domain(const MonomialIdeal& ideal, const char* op);

/// Minimal primes of a square-free ideal, as variable supports. Equivalently
/// the minimal transversals of the generator supports. Sorted by the canonical
/// order of their indicator monomials.
std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal);

/// Brute-force minimal transversals over all 2^d subsets. Only for d <= 20.
std::vector<VarSet> minimal_primes_bruteforce(const MonomialIdeal& ideal);

/// (x_i : i in s)^n.
MonomialIdeal prime_power(std::size_t vars, VarSet s, unsigned n);

/// The n-th symbolic power, as the intersection of the n-th powers of the
/// minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n);

/// Initial degree: least total degree of a generator. Throws on the zero ideal.
std::uint64_t alpha(const MonomialIdeal& ideal);

/// Radical of a monomial ideal (supports of generators).
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Height of a nonzero proper monomial ideal.
std::size_t height(const MonomialIdeal& ideal);

}  // namespace sfpow

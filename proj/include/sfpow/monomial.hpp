#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sfpow {

using Exponent = std::uint32_t;

/// A set of variable (or vertex) indices, 0-based, stored as a bit mask.
/// Limits the ambient variable count to 64 wherever a VarSet is involved.
class VarSet {
 public:
  static constexpr std::size_t kMaxVars = 64;

  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  VarSet(std::initializer_list<std::size_t> indices);

  static VarSet full(std::size_t count);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VarSet with(std::size_t i) const { return VarSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr VarSet without(std::size_t i) const { return VarSet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }
  constexpr VarSet minus(VarSet o) const { return VarSet(bits_ & ~o.bits_); }

  /// Indices in increasing order.
  std::vector<std::size_t> elements() const;

  friend constexpr bool operator==(VarSet, VarSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// The monomial x^a over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `vars` variables.
  explicit Monomial(std::size_t vars) : exps_(vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// Product of the variables in `s`.
  static Monomial indicator(std::size_t vars, VarSet s);

  std::size_t vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  VarSet support() const;

  /// Entrywise <=, i.e. this monomial divides `other`.
  bool divides(const Monomial& other) const;

  /// Checked entrywise sum.
  Monomial operator*(const Monomial& other) const;
  /// Entrywise maximum.
  Monomial lcm(const Monomial& other) const;
  /// Entrywise minimum.
  Monomial gcd(const Monomial& other) const;
  /// Every exponent multiplied by m (checked).
  Monomial scaled(Exponent m) const;
  /// Every exponent replaced by ceil(e / m).
  Monomial ceil_div(Exponent m) const;
  /// Entrywise difference; requires other | *this.
  Monomial quotient(const Monomial& divisor) const;

  /// Renders as `x1^2*x3`, or `1` for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// The canonical generator order: ascending total degree, ties broken by
/// descending lexicographic comparison of exponent vectors (x1^2 before x1*x2
/// before x2^2).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Parses `x1^2*x3` (1-based indices) into a monomial over `vars` variables.
/// `1` parses to the unit monomial.
Monomial parse_monomial(std::string_view text, std::size_t vars);

}  // namespace sfpow

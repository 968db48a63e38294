#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace sfpow {

/// Exact rationals backed by GMP.
struct RationalField {
  using Element = mpq_class;

  unsigned characteristic() const { return 0; }
  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const { return a / b; }
  Element neg(const Element& a) const { return -a; }
};

/// Integers modulo a prime p < 2^31.
struct PrimeField {
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t prime) : p(prime) {}

  unsigned characteristic() const { return p; }
  Element zero() const { return 0; }
  Element one() const { return 1 % p; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p) : r);
  }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + b) % p); }
  Element sub(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + p - b) % p); }
  Element mul(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} * b) % p); }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element inv(Element a) const {
    // Fermat
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<Element>(result);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::uint32_t p;
};

bool is_prime(std::uint64_t n);

/// Throws DomainError unless `ch` is 0 or a prime below 2^31.
void require_field_characteristic(unsigned ch);

}  // namespace sfpow

#include <gtest/gtest.h>

#include <limits>

#include "helpers.hpp"
#include "sfpow/error.hpp"
#include "sfpow/monomial.hpp"

using namespace sfpow;

TEST(Monomial, ParseAndPrint) {
  auto m = mono("x1^2*x3", 3);
  EXPECT_EQ(m, (Monomial{2, 0, 1}));
  EXPECT_EQ(m.to_string(), "x1^2*x3");
  EXPECT_EQ(mono("1", 2).to_string(), "1");
  EXPECT_EQ(mono("x2*x2", 2), (Monomial{0, 2}));
  EXPECT_THROW(parse_monomial("x4", 3), MalformedInput);
  EXPECT_THROW(parse_monomial("x0", 3), MalformedInput);
  EXPECT_THROW(parse_monomial("y1", 3), MalformedInput);
}

TEST(Monomial, Arithmetic) {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(a * b, (Monomial{3, 3, 1}));
  EXPECT_EQ(a.lcm(b), (Monomial{2, 3, 1}));
  EXPECT_EQ(a.gcd(b), (Monomial{1, 0, 0}));
  EXPECT_EQ(a.scaled(3), (Monomial{6, 0, 3}));
  EXPECT_EQ((Monomial{2, 3, 1}).ceil_div(2), (Monomial{1, 2, 1}));
  EXPECT_EQ((Monomial{3, 3, 1}).quotient(b), a);
  EXPECT_TRUE(a.divides(a * b));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_TRUE((Monomial{1, 0, 1}).is_squarefree());
  EXPECT_EQ(a.support(), (VarSet{0, 2}));
}

TEST(Monomial, DimensionMismatch) {
  EXPECT_THROW(Monomial({1, 2}) * Monomial({1}), DimensionMismatch);
}

TEST(Monomial, CheckedOverflow) {
  const auto big = std::numeric_limits<Exponent>::max();
  Monomial a{big};
  EXPECT_THROW(a * Monomial{1}, ExponentOverflow);
  EXPECT_THROW(a.scaled(2), ExponentOverflow);
}

TEST(Monomial, GrlexOrder) {
  // x^2, xy, y^2 and degree first
  EXPECT_TRUE(grlex_less(Monomial{2, 0}, Monomial{1, 1}));
  EXPECT_TRUE(grlex_less(Monomial{1, 1}, Monomial{0, 2}));
  EXPECT_TRUE(grlex_less(Monomial{0, 1}, Monomial{2, 0}));
  EXPECT_FALSE(grlex_less(Monomial{1, 1}, Monomial{1, 1}));
}

TEST(VarSet, Basics) {
  VarSet s{0, 3};
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_EQ(s.elements(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(VarSet::full(3), (VarSet{0, 1, 2}));
  EXPECT_EQ(Monomial::indicator(4, s), (Monomial{1, 0, 0, 1}));
}

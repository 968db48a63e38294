#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "sfpow/betti.hpp"
#include "sfpow/error.hpp"
#include "sfpow/fixtures.hpp"
#include "sfpow/resolution.hpp"
#include "sfpow/simplicial.hpp"
#include "sfpow/summary.hpp"

using namespace sfpow;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long alternating_homology(const std::map<int, std::size_t>& ranks) {
  long sum = 0;
  for (auto [deg, rank] : ranks) sum += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(rank);
  return sum;
}

}  // namespace

TEST(ReducedHomology, Examples) {
  auto circle = SimplicialComplex::generated_by(3, {VarSet{0, 1}, VarSet{1, 2}, VarSet{0, 2}});
  EXPECT_EQ(reduced_homology_ranks(circle, 0), (std::map<int, std::size_t>{{1, 1}}));
  EXPECT_TRUE(reduced_homology_ranks(SimplicialComplex::simplex(4, VarSet::full(4)), 0).empty());
  auto points = SimplicialComplex::generated_by(2, {VarSet{0}, VarSet{1}});
  EXPECT_EQ(reduced_homology_ranks(points, 0), (std::map<int, std::size_t>{{0, 1}}));
  EXPECT_EQ(reduced_homology_ranks(SimplicialComplex::irrelevant(3), 0), (std::map<int, std::size_t>{{-1, 1}}));
  EXPECT_TRUE(reduced_homology_ranks(SimplicialComplex::void_complex(3), 0).empty());
  EXPECT_THROW(reduced_homology_ranks(circle, 4), DomainError);
}

TEST(ReducedHomology, SphereAndTorsionFreeAcrossFields) {
  // boundary of the 3-simplex is a 2-sphere
  std::vector<VarSet> facets;
  for (std::size_t v = 0; v < 4; ++v) facets.push_back(VarSet::full(4).without(v));
  auto sphere = SimplicialComplex::generated_by(4, facets);
  for (unsigned ch : {0u, 2u, 3u}) EXPECT_EQ(reduced_homology_ranks(sphere, ch), (std::map<int, std::size_t>{{2, 1}}));
}

TEST(ReducedHomology, EulerCharacteristic) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<VarSet> facets;
    const auto count = rng() % 5;
    for (std::uint64_t k = 0; k < count; ++k) facets.push_back(VarSet(rng() % (std::uint64_t{1} << n)));
    auto K = facets.empty() ? SimplicialComplex::void_complex(n) : SimplicialComplex::generated_by(n, facets);
    EXPECT_EQ(alternating_homology(reduced_homology_ranks(K, 0)), K.reduced_euler_characteristic());
  }
}

TEST(Betti, UpperKoszulEulerCharacteristic) {
  auto I = symbolic_power(cycle_ideal(5), 2);
  for (const auto& b : lcm_lattice(I)) {
    auto K = upper_koszul_complex(I, b);
    EXPECT_EQ(alternating_homology(reduced_homology_ranks(K, 0)), K.reduced_euler_characteristic()) << b.to_string();
  }
}

TEST(Betti, KoszulComplexes) {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto t = betti_numbers(variable_ideal(k));
    auto graded = t.graded_quotient();
    EXPECT_EQ(graded.at({0, 0}), 1u);
    for (std::size_t i = 1; i <= k; ++i) EXPECT_EQ(graded.at({static_cast<int>(i), static_cast<long>(i)}),
                                                   static_cast<std::size_t>(binomial(k, i)));
    EXPECT_EQ(graded.size(), k + 1);
    EXPECT_EQ(t.projdim_quotient(), static_cast<int>(k));
    EXPECT_EQ(t.regularity_quotient(), 0);
  }
}

TEST(Betti, PathSyzygy) {
  auto t = betti_numbers(path_ideal(3));
  EXPECT_EQ(t.quotient_rank(2, Monomial{1, 1, 1}), 1u);
  EXPECT_EQ(t.quotient_rank(1, Monomial{1, 1, 0}), 1u);
  EXPECT_EQ(t.quotient_rank(0, Monomial{0, 0, 0}), 1u);
  EXPECT_EQ(t.total_ideal_rank(), 3u);
}

TEST(Betti, GeneratorsInDegreeZero) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = oracle::random_monomial_ideal(rng, 3, 5, 2);
    if (I.is_unit()) continue;
    auto t = betti_numbers(I);
    std::vector<Monomial> zero;
    for (const auto& e : t.entries()) {
      if (e.i == 0) {
        EXPECT_EQ(e.rank, 1u);
        zero.push_back(e.b);
      }
    }
    EXPECT_EQ(zero, std::vector<Monomial>(I.generators().begin(), I.generators().end()));
    EXPECT_LE(t.total_ideal_rank() + 1, std::size_t{1} << I.mu());
  }
}

TEST(Betti, ParallelMatchesSerial) {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 30; ++trial) {
    auto I = oracle::random_monomial_ideal(rng, 4, 6, 2);
    if (I.is_unit()) continue;
    EXPECT_EQ(betti_numbers(I), betti_numbers_serial(I));
  }
}

TEST(Betti, RationalVersusCharTwo) {
  // Informational: small square-free ideals rarely depend on the field.
  std::mt19937_64 rng(137);
  int differ = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto I = oracle::random_squarefree(rng, 2 + rng() % 4, 5);
    if (!(betti_numbers(I, 0) == betti_numbers(I, 2))) {
      ++differ;
      std::cout << "[info] Betti numbers over Q and F_2 differ for " << I.to_string() << '\n';
    }
  }
  RecordProperty("char_disagreements", differ);
}

TEST(Betti, DomainErrors) {
  EXPECT_THROW(betti_numbers(MonomialIdeal(2)), DomainError);
  EXPECT_THROW(betti_numbers(MonomialIdeal::unit(2)), DomainError);
  EXPECT_THROW(betti_numbers(path_ideal(3), 6), DomainError);
}

TEST(Resolution, IsMinimalComplex) {
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 30; ++trial) {
    auto I = oracle::random_monomial_ideal(rng, 3, 5, 2);
    if (I.is_unit()) continue;
    auto Q = MinimalResolution<RationalField>::build(RationalField{}, I);
    EXPECT_TRUE(Q.is_complex());
    EXPECT_EQ(Q.betti(), betti_numbers(I));
    auto F = MinimalResolution<PrimeField>::build(PrimeField{3}, I);
    EXPECT_TRUE(F.is_complex());
    EXPECT_EQ(F.betti(), betti_numbers(I, 3));
  }
}

TEST(Summary, ResidueField) {
  auto s = summary(variable_ideal(2));
  EXPECT_EQ(s.depth, 0);
  EXPECT_EQ(s.reg, 0);
  EXPECT_EQ(s.dim, 0u);
  ASSERT_EQ(s.a_invariants.size(), 1u);
  EXPECT_EQ(s.a_invariants[0], 0);
  EXPECT_TRUE(s.consistent());
}

TEST(Summary, PrincipalIdeal) {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto J = MonomialIdeal::normalize({Monomial::indicator(5, VarSet::full(k))}, 5);
    auto s = summary(J);
    EXPECT_EQ(s.pd, 1);
    EXPECT_EQ(s.depth, 4);
    EXPECT_EQ(s.reg, static_cast<long>(k) - 1);
    EXPECT_TRUE(s.consistent());
  }
}

TEST(Summary, CycleSymbolicPowers) {
  auto I = cycle_ideal(5);
  const long reg[] = {2, 3, 5};
  const int depth[] = {2, 2, 1};
  for (unsigned n = 1; n <= 3; ++n) {
    auto s = summary(symbolic_power(I, n));
    EXPECT_EQ(s.reg, reg[n - 1]);
    EXPECT_EQ(s.depth, depth[n - 1]);
    EXPECT_EQ(s.dim, 2u);
    EXPECT_EQ(s.depth, static_cast<int>(s.vars) - s.pd);
    EXPECT_TRUE(s.consistent());
  }
  EXPECT_EQ(format_a_invariant(summary(I).a_invariants[0]), "-inf");
}

TEST(Summary, TwoPathsAgreeOnRandomIdeals) {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = oracle::random_squarefree(rng, 2 + rng() % 4, 5);
    for (unsigned n = 1; n <= 2; ++n) {
      auto s = summary(symbolic_power(I, n));
      EXPECT_TRUE(s.consistent()) << I.to_string() << " n=" << n;
      EXPECT_EQ(s.reg, s.betti.regularity_quotient());
    }
  }
}

TEST(Summary, BudgetAndDomain) {
  SummaryOptions o;
  o.max_generators = 4;
  EXPECT_THROW(summary(cycle_ideal(5), 0, o), BudgetExceeded);
  EXPECT_THROW(summary(MonomialIdeal(3)), DomainError);
}

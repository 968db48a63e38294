#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "sfpow/clutter.hpp"
#include "sfpow/corpus.hpp"
#include "sfpow/equality.hpp"
#include "sfpow/error.hpp"
#include "sfpow/fixtures.hpp"

using namespace sfpow;

namespace {

Clutter cl(const char* name) { return clutter_from_ideal(fixture(name)); }

Clutter random_clutter(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  return clutter_from_ideal(oracle::random_squarefree(rng, n, max_edges));
}

WeightVector random_weights(std::mt19937_64& rng, std::size_t n, std::uint32_t top) {
  WeightVector c(n);
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % (top + 1));
  return c;
}

}  // namespace

TEST(Clutter, Validation) {
  EXPECT_THROW(Clutter(3, {VarSet{0, 1}, VarSet{0}}), MalformedInput);
  EXPECT_THROW(Clutter(2, {VarSet{0, 2}}), MalformedInput);
  auto m = Clutter::minimalized(3, {VarSet{0, 1}, VarSet{0}, VarSet{2}});
  EXPECT_EQ(m.edge_count(), 2u);
  auto inc = cl("path3").incidence();
  EXPECT_EQ(inc, (std::vector<std::vector<int>>{{1, 0}, {1, 1}, {0, 1}}));
}

TEST(Conversion, Examples) {
  auto C = clutter_from_ideal(path_ideal(3));
  EXPECT_EQ(C.vertices(), 3u);
  EXPECT_EQ(std::vector<VarSet>(C.edges().begin(), C.edges().end()), (std::vector<VarSet>{VarSet{0, 1}, VarSet{1, 2}}));
  auto c5 = clutter_from_ideal(cycle_ideal(5));
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_EQ(ideal_from_clutter(c5), cycle_ideal(5));
  EXPECT_THROW(clutter_from_ideal(ideal("x1^2", 1)), DomainError);
}

TEST(Conversion, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    auto I = oracle::random_squarefree(rng, 1 + rng() % 7, 6);
    auto C = clutter_from_ideal(I);
    EXPECT_EQ(ideal_from_clutter(C), I);
    EXPECT_EQ(clutter_from_ideal(ideal_from_clutter(C)), C);
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(cl("c3"), oracle::ones(3)).value, 2u);
  auto zero = gamma(cl("c5"), WeightVector(5, 0));
  EXPECT_EQ(zero.value, 0u);
  EXPECT_EQ(zero.witness, (std::vector<std::uint64_t>(5, 1)));
  EXPECT_EQ(gamma(cl("c5"), oracle::ones(5)).value, 3u);
  EXPECT_THROW(gamma(cl("c3"), oracle::ones(4)), DimensionMismatch);
}

TEST(Gamma, LexLeastWitness) {
  auto g = gamma(cl("c3"), oracle::ones(3));
  EXPECT_EQ(g.witness, (std::vector<std::uint64_t>{0, 1, 1}));
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(cl("c3"), oracle::ones(3)).value, 1u);
  EXPECT_EQ(sigma(cl("c5"), WeightVector(5, 0)).value, 0u);
  EXPECT_EQ(sigma(cl("c5"), oracle::ones(5)).value, 2u);
  EXPECT_THROW(sigma(cl("c3"), oracle::ones(2)), DimensionMismatch);
}

TEST(GammaSigma, MatchOracles) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto C = random_clutter(rng, n, 5);
    auto c = random_weights(rng, n, 3);
    auto g = gamma(C, c);
    auto s = sigma(C, c);
    EXPECT_EQ(g.value, oracle::gamma(C, c)) << C.to_string();
    EXPECT_EQ(s.value, oracle::sigma(C, c)) << C.to_string();
    EXPECT_EQ(g.value, oracle::gamma_unrestricted(C, c, 2));
    // witnesses are feasible and attain the value
    std::uint64_t cost = 0;
    for (std::size_t v = 0; v < n; ++v) cost += g.witness[v] * c[v];
    EXPECT_EQ(cost, g.value);
    for (auto e : C.edges()) {
      std::uint64_t hit = 0;
      for (auto v : e.elements()) hit += g.witness[v];
      EXPECT_GE(hit, 1u);
    }
    std::vector<std::uint64_t> load(n, 0);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < C.edge_count(); ++k) {
      total += s.witness[k];
      for (auto v : C.edges()[k].elements()) load[v] += s.witness[k];
    }
    EXPECT_EQ(total, s.value);
    for (std::size_t v = 0; v < n; ++v) EXPECT_LE(load[v], c[v]);
  }
}

TEST(GammaSigma, WeakDualityAndMonotonicity) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    auto C = random_clutter(rng, n, 6);
    auto c = random_weights(rng, n, 3);
    auto d = c;
    for (auto& x : d) x += static_cast<std::uint32_t>(rng() % 2);
    EXPECT_LE(sigma(C, c).value, gamma(C, c).value);
    EXPECT_LE(gamma(C, c).value, gamma(C, d).value);
    EXPECT_LE(sigma(C, c).value, sigma(C, d).value);
  }
}

TEST(PacksFor, Examples) {
  EXPECT_FALSE(packs_for(cl("c3"), oracle::ones(3)));
  EXPECT_TRUE(packs_for(cl("path3"), oracle::ones(3)));
  EXPECT_TRUE(packs_for(cl("c5"), WeightVector(5, 0)));
  auto r = cover_packing(cl("c5"), oracle::ones(5));
  EXPECT_EQ(r.gamma, 3u);
  EXPECT_EQ(r.sigma, 2u);
  EXPECT_FALSE(r.packs);
}

TEST(Mfmc, Examples) {
  auto c5 = mfmc_check(cl("c5"));
  EXPECT_FALSE(c5.mfmc);
  ASSERT_TRUE(c5.failing_c);
  for (auto w : *c5.failing_c) EXPECT_LE(w, 3u);
  EXPECT_FALSE(packs_for(cl("c5"), *c5.failing_c));
  EXPECT_TRUE(mfmc_check(cl("path3")).mfmc);
  EXPECT_TRUE(mfmc_check(cl("edge")).mfmc);
  EXPECT_TRUE(mfmc_check(cl("c4")).mfmc);
  EXPECT_TRUE(mfmc_check(cl("k23")).mfmc);
}

TEST(Mfmc, FirstFailureIsLexicographicallyFirst) {
  auto C = cl("c5");
  auto r = mfmc_check_serial(C);
  ASSERT_TRUE(r.failing_c);
  const auto cap = mfmc_weight_cap(C);
  // every earlier vector in the box packs
  bool before = true;
  oracle::for_each_in_box(5, cap, [&](const Monomial& m) {
    WeightVector c(5);
    for (std::size_t i = 0; i < 5; ++i) c[4 - i] = m[i];
    if (c == *r.failing_c) before = false;
    if (before) EXPECT_TRUE(packs_for(C, c));
  });
}

TEST(Mfmc, ParallelMatchesSerial) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    auto C = random_clutter(rng, 2 + rng() % 4, 6);
    auto p = mfmc_check(C);
    auto s = mfmc_check_serial(C);
    EXPECT_EQ(p.mfmc, s.mfmc);
    EXPECT_EQ(p.failing_c, s.failing_c);
  }
}

TEST(Mfmc, SymmetryGivesSameVerdict) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    auto C = random_clutter(rng, 2 + rng() % 4, 6);
    MfmcOptions o;
    o.use_symmetry = true;
    auto sym = mfmc_check(C, o);
    auto plain = mfmc_check(C);
    EXPECT_EQ(sym.mfmc, plain.mfmc);
    EXPECT_LE(sym.vectors_checked, mfmc_sweep_size(C, o.budget));
  }
}

TEST(Mfmc, AgreesWithEqualityCriterion) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 80; ++trial) {
    auto I = oracle::random_squarefree(rng, 2 + rng() % 4, 5);
    EXPECT_EQ(mfmc_check(clutter_from_ideal(I)).mfmc, equal_all_powers(I).verdict_all_n) << I.to_string();
  }
}

TEST(Mfmc, BudgetRefusal) {
  MfmcOptions o;
  o.budget = 10;
  EXPECT_THROW(mfmc_check(cl("c5"), o), BudgetExceeded);
  EXPECT_THROW(mfmc_sweep_size(cl("c5"), 10), BudgetExceeded);
  EXPECT_EQ(mfmc_sweep_size(cl("c5"), 1024), 1024u);
  EXPECT_THROW(mfmc_sweep_size(cl("c5"), 1023), BudgetExceeded);
}

TEST(Mfmc, SweepRowsMatchOptima) {
  auto C = cl("path3");
  auto rows = packing_sweep(C, 1000);
  EXPECT_EQ(rows.size(), 8u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.gamma, oracle::gamma(C, r.c));
    EXPECT_EQ(r.sigma, oracle::sigma(C, r.c));
  }
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(automorphisms(cl("c5")).size(), 10u);
  EXPECT_EQ(automorphisms(cl("c3")).size(), 6u);
  EXPECT_EQ(automorphisms(cl("path3")).size(), 2u);
  EXPECT_EQ(automorphisms(cl("k23")).size(), 12u);
}

TEST(Konig, Examples) {
  EXPECT_EQ(cover_number(cl("c3")), 2u);
  EXPECT_EQ(matching_number(cl("c3")), 1u);
  EXPECT_EQ(cover_number(cl("c5")), 3u);
  EXPECT_EQ(matching_number(cl("c5")), 2u);
  EXPECT_EQ(cover_number(cl("edge")), 1u);
  EXPECT_EQ(matching_number(cl("edge")), 1u);
  EXPECT_FALSE(is_konig(cl("c3")));
  EXPECT_TRUE(is_konig(cl("path3")));
  EXPECT_TRUE(is_konig(Clutter(3, {})));
  EXPECT_TRUE(is_konig(Clutter(3, {VarSet{}})));
}

TEST(Minor, Examples) {
  auto tri = cl("c3");
  auto del = minor(tri, VarSet{2}, VarSet{});
  EXPECT_EQ(std::vector<VarSet>(del.edges().begin(), del.edges().end()), (std::vector<VarSet>{VarSet{0, 1}}));
  auto con = minor(tri, VarSet{}, VarSet{2});
  EXPECT_EQ(std::vector<VarSet>(con.edges().begin(), con.edges().end()), (std::vector<VarSet>{VarSet{0}, VarSet{1}}));
  EXPECT_EQ(minor(tri, VarSet{}, VarSet{}), tri);
  EXPECT_THROW(minor(tri, VarSet{1}, VarSet{1}), DomainError);
  EXPECT_TRUE(minor(cl("edge"), VarSet{}, VarSet{0, 1}).is_unit());
}

TEST(Minor, MatchesIdealSubstitution) {
  // Setting variables to 0 and 1 in the ideal gives the minor's edge ideal.
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    auto I = oracle::random_squarefree(rng, n, 5);
    const auto zeros = VarSet(rng() % (std::uint64_t{1} << n));
    const auto ones = VarSet(rng() % (std::uint64_t{1} << n)).minus(zeros);
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
      if (g.support().intersects(zeros)) continue;
      gens.push_back(Monomial::indicator(n, g.support().minus(ones)));
    }
    auto expected = MonomialIdeal::normalize(gens, n);
    auto M = minor(clutter_from_ideal(I), zeros, ones);
    if (expected.is_zero()) {
      EXPECT_EQ(M.edge_count(), 0u);
    } else {
      EXPECT_EQ(ideal_from_clutter(M), expected);
    }
  }
}

TEST(Packed, Examples) {
  auto tri = is_packed(cl("c3"));
  EXPECT_FALSE(tri.packed);
  EXPECT_EQ(tri.failing_zeros, VarSet{});
  EXPECT_EQ(tri.failing_ones, VarSet{});
  EXPECT_TRUE(is_packed(cl("path3")).packed);
  // C5 itself has cover number 3 and matching number 2.
  EXPECT_FALSE(is_packed(cl("c5")).packed);
  EXPECT_TRUE(is_packed(cl("k23")).packed);
  EXPECT_THROW(is_packed(clutter_from_ideal(cycle_ideal(5)), 4), BudgetExceeded);
}

TEST(Packed, MatchesExhaustiveMinors) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    auto C = random_clutter(rng, n, 5);
    bool all = true;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
      for (std::uint64_t o = 0; o < (std::uint64_t{1} << n); ++o) {
        if (z & o) continue;
        auto M = minor(C, VarSet(z), VarSet(o));
        bool konig = M.is_unit() || oracle::gamma(M, oracle::ones(n)) == oracle::sigma(M, oracle::ones(n));
        all = all && konig;
      }
    }
    EXPECT_EQ(is_packed(C).packed, all) << C.to_string();
  }
}

TEST(Packed, EqualityImpliesPacked) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    auto I = oracle::random_squarefree(rng, 2 + rng() % 4, 5);
    if (equal_all_powers(I).verdict_all_n) EXPECT_TRUE(is_packed(clutter_from_ideal(I)).packed) << I.to_string();
  }
}

TEST(LpMembership, Examples) {
  auto c5 = membership_via_lp(cl("c5"), oracle::ones(5), 3);
  EXPECT_TRUE(c5.in_symbolic);
  EXPECT_FALSE(c5.in_ordinary);
  auto tri = membership_via_lp(cl("c3"), oracle::ones(3), 2);
  EXPECT_TRUE(tri.in_symbolic);
  EXPECT_FALSE(tri.in_ordinary);
  auto zero = membership_via_lp(cl("path3"), WeightVector(3, 0), 1);
  EXPECT_FALSE(zero.in_symbolic);
  EXPECT_FALSE(zero.in_ordinary);
  EXPECT_THROW(membership_via_lp(cl("c3"), oracle::ones(3), 0), DomainError);
}

TEST(LpMembership, AgreesWithIdealMembership) {
  for (auto name : {"c3", "c4", "c5", "path3"}) {
    auto I = fixture(name);
    auto r = translation_check_serial(I, 3, 4);
    EXPECT_EQ(r.violations, 0u) << name;
  }
}

TEST(LpMembership, ParallelMatchesSerial) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    auto I = oracle::random_squarefree(rng, 2 + rng() % 3, 4);
    auto p = translation_check(I, 3, 3);
    auto s = translation_check_serial(I, 3, 3);
    EXPECT_EQ(p.vectors, s.vectors);
    EXPECT_EQ(p.violations, s.violations);
    EXPECT_EQ(p.failing_c, s.failing_c);
  }
}

#pragma once

// Brute-force references used by the unit and acceptance tests. Every
// function here is deliberately naive and independent of the library's
// search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "sfpow/clutter.hpp"
#include "sfpow/ideal.hpp"

namespace oracle {

using sfpow::Clutter;
using sfpow::Exponent;
using sfpow::Monomial;
using sfpow::MonomialIdeal;
using sfpow::VarSet;

/// Minimal vertex covers by checking all 2^d subsets.
inline std::vector<VarSet> minimal_covers(const MonomialIdeal& I) {
  const std::size_t d = I.vars();
  std::vector<VarSet> covers;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
    VarSet s(bits);
    bool ok = true;
    for (const auto& g : I.generators()) ok = ok && g.support().intersects(s);
    if (ok) covers.push_back(s);
  }
  std::vector<VarSet> minimal;
  for (auto s : covers) {
    bool proper_sub = false;
    for (auto t : covers) proper_sub = proper_sub || (t != s && t.is_subset_of(s));
    if (!proper_sub) minimal.push_back(s);
  }
  return minimal;
}

/// x^a in I^(n) iff every minimal cover S has sum_{i in S} a_i >= n.
inline bool in_symbolic_power(const MonomialIdeal& I, unsigned n, const Monomial& a) {
  for (auto s : minimal_covers(I)) {
    std::uint64_t sum = 0;
    for (auto i : s.elements()) sum += a[i];
    if (sum < n) return false;
  }
  return true;
}

/// x^a in I^n iff some product of n generators divides a (plain recursion).
inline bool in_ordinary_power(const MonomialIdeal& I, unsigned n, const Monomial& a) {
  if (n == 0) return true;
  for (const auto& g : I.generators()) {
    if (g.divides(a) && in_ordinary_power(I, n - 1, a.quotient(g))) return true;
  }
  return false;
}

/// Calls f on every exponent vector in {0..top}^d.
inline void for_each_in_box(std::size_t d, Exponent top, const std::function<void(const Monomial&)>& f) {
  std::vector<Exponent> e(d, 0);
  while (true) {
    f(Monomial(e));
    std::size_t i = 0;
    while (i < d && e[i] == top) e[i++] = 0;
    if (i == d) return;
    ++e[i];
  }
}

inline std::vector<std::uint32_t> ones(std::size_t n) { return std::vector<std::uint32_t>(n, 1); }

/// gamma over all 0/1 vectors.
inline std::uint64_t gamma(const Clutter& C, const std::vector<std::uint32_t>& c) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << C.vertices()); ++bits) {
    VarSet s(bits);
    bool covers = true;
    for (auto e : C.edges()) covers = covers && e.intersects(s);
    if (!covers) continue;
    std::uint64_t cost = 0;
    for (auto v : s.elements()) cost += c[v];
    best = std::min(best, cost);
  }
  return best;
}

/// gamma over x in {0..top}^n, without the 0/1 restriction.
inline std::uint64_t gamma_unrestricted(const Clutter& C, const std::vector<std::uint32_t>& c, Exponent top) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for_each_in_box(C.vertices(), top, [&](const Monomial& x) {
    for (auto e : C.edges()) {
      std::uint64_t hit = 0;
      for (auto v : e.elements()) hit += x[v];
      if (hit < 1) return;
    }
    std::uint64_t cost = 0;
    for (std::size_t v = 0; v < C.vertices(); ++v) cost += std::uint64_t{c[v]} * x[v];
    best = std::min(best, cost);
  });
  return best;
}

/// sigma over the box y_e in {0..min_{v in e} c_v}.
inline std::uint64_t sigma(const Clutter& C, const std::vector<std::uint32_t>& c) {
  const std::size_t m = C.edge_count();
  std::vector<std::uint32_t> cap(m), y(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    cap[k] = std::numeric_limits<std::uint32_t>::max();
    for (auto v : C.edges()[k].elements()) cap[k] = std::min(cap[k], c[v]);
  }
  std::uint64_t best = 0;
  while (true) {
    std::vector<std::uint64_t> load(C.vertices(), 0);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < m; ++k) {
      total += y[k];
      for (auto v : C.edges()[k].elements()) load[v] += y[k];
    }
    bool ok = true;
    for (std::size_t v = 0; v < C.vertices(); ++v) ok = ok && load[v] <= c[v];
    if (ok) best = std::max(best, total);
    std::size_t k = 0;
    while (k < m && y[k] == cap[k]) y[k++] = 0;
    if (k == m) return best;
    ++y[k];
  }
}

/// Random square-free ideal: 1..max_gens nonempty supports in d variables.
inline MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t d, std::size_t max_gens) {
  std::vector<Monomial> gens;
  const auto count = 1 + rng() % max_gens;
  for (std::uint64_t k = 0; k < count; ++k) {
    gens.push_back(Monomial::indicator(d, VarSet(1 + rng() % ((std::uint64_t{1} << d) - 1))));
  }
  return MonomialIdeal::normalize(std::move(gens), d);
}

/// Random monomial ideal with exponents up to `top`.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t d, std::size_t max_gens,
                                           Exponent top) {
  std::vector<Monomial> gens;
  const auto count = 1 + rng() % max_gens;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Exponent> e(d);
    for (auto& x : e) x = static_cast<Exponent>(rng() % (top + 1));
    gens.emplace_back(e);
  }
  return MonomialIdeal::normalize(std::move(gens), d);
}

}  // namespace oracle

#include "sfpow/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "sfpow/error.hpp"

namespace sfpow {

namespace {

void require_same_vars(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
  if (a.vars() != b.vars()) {
    throw DimensionMismatch(std::string(op) + ": ideals over " + std::to_string(a.vars()) +
                            " and " + std::to_string(b.vars()) + " variables");
  }
}

bool indicator_less(VarSet a, VarSet b, std::size_t vars) {
  return grlex_less(Monomial::indicator(vars, a), Monomial::indicator(vars, b));
}

// Keeps only inclusion-minimal sets, sorted canonically.
std::vector<VarSet> minimal_sets(std::vector<VarSet> sets, std::size_t vars) {
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  for (auto s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [s](VarSet k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), [vars](VarSet a, VarSet b) { return indicator_less(a, b, vars); });
  return kept;
}

}  // namespace

MonomialIdeal MonomialIdeal::normalize(std::vector<Monomial> gens, std::size_t vars) {
  for (const auto& g : gens) {
    if (g.vars() != vars) {
      throw MalformedInput("generator " + g.to_string() + " has " + std::to_string(g.vars()) +
                           " entries, expected " + std::to_string(vars));
    }
  }
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(vars);
  if (gens.empty()) return out;
  if (gens.front().is_one()) return unit(vars);

  // Every possible divisor of a candidate precedes it in grlex order, so one
  // pass suffices. below[i][v] holds the kept generators with exponent <= v
  // in variable i; a kept generator divides g iff it lies in every below[i][g_i].
  std::vector<Exponent> top(vars, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < vars; ++i) top[i] = std::max(top[i], g[i]);
  }
  const std::size_t words = (gens.size() + 63) / 64;
  std::vector<std::vector<std::vector<std::uint64_t>>> below(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    below[i].assign(top[i] + 1, std::vector<std::uint64_t>(words, 0));
  }
  std::vector<std::uint64_t> acc(words);
  out.gens_.reserve(gens.size());
  for (auto& g : gens) {
    const std::size_t kept = out.gens_.size();
    const std::size_t used = (kept + 63) / 64;
    bool redundant = false;
    if (used != 0) {
      if (vars == 0) {
        redundant = true;
      } else {
        std::copy_n(below[0][g[0]].begin(), used, acc.begin());
        for (std::size_t i = 1; i < vars; ++i) {
          const auto& row = below[i][g[i]];
          for (std::size_t w = 0; w < used; ++w) acc[w] &= row[w];
        }
        redundant = std::any_of(acc.begin(), acc.begin() + used, [](std::uint64_t w) { return w != 0; });
      }
    }
    if (redundant) continue;
    const std::uint64_t bit = std::uint64_t{1} << (kept % 64);
    for (std::size_t i = 0; i < vars; ++i) {
      for (Exponent v = g[i]; v <= top[i]; ++v) below[i][v][kept / 64] |= bit;
    }
    out.gens_.push_back(std::move(g));
  }
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t vars) {
  MonomialIdeal out(vars);
  out.gens_.emplace_back(vars);
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b, "multiply");
  std::vector<Monomial> prods;
  prods.reserve(a.mu() * b.mu());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) prods.push_back(g * h);
  }
  return MonomialIdeal::normalize(std::move(prods), a.vars());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.vars());
  for (unsigned k = 0; k < n; ++k) result = multiply(result, ideal);
  return result;
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, Exponent m) {
  if (m == 0) throw DomainError("bracket_power needs m >= 1");
  std::vector<Monomial> gens;
  gens.reserve(ideal.mu());
  for (const auto& g : ideal.generators()) gens.push_back(g.scaled(m));
  return MonomialIdeal::normalize(std::move(gens), ideal.vars());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b, "intersect");
  std::vector<Monomial> lcms;
  // a generator already inside the other ideal makes every lcm it forms redundant
  std::vector<char> b_inside(b.mu(), 0);
  for (std::size_t k = 0; k < b.mu(); ++k) b_inside[k] = contains_monomial(a, b.generators()[k]);
  for (std::size_t k = 0; k < b.mu(); ++k) {
    if (b_inside[k]) lcms.push_back(b.generators()[k]);
  }
  for (const auto& g : a.generators()) {
    if (contains_monomial(b, g)) {
      lcms.push_back(g);
      continue;
    }
    for (std::size_t k = 0; k < b.mu(); ++k) {
      if (!b_inside[k]) lcms.push_back(g.lcm(b.generators()[k]));
    }
  }
  return MonomialIdeal::normalize(std::move(lcms), a.vars());
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& a) {
  if (a.vars() != ideal.vars()) throw DimensionMismatch("contains_monomial: variable count mismatch");
  const auto deg = a.degree();
  for (const auto& g : ideal.generators()) {
    if (g.degree() > deg) break;
    if (g.divides(a)) return true;
  }
  return false;
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  return !first_generator_outside(a, b).has_value();
}

std::optional<Monomial> first_generator_outside(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a, b, "containment");
  for (const auto& g : a.generators()) {
    if (!contains_monomial(b, g)) return g;
  }
  return std::nullopt;
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

void require_theorem_domain(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DomainError(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw DomainError(std::string(op) + ": unit ideal");
  if (!is_squarefree(ideal)) throw DomainError(std::string(op) + ": ideal is not square-free");
  if (ideal.vars() > VarSet::kMaxVars) throw DomainError(std::string(op) + ": more than 64 variables");
}

std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal) {
  require_theorem_domain(ideal, "minimal_primes");
  // Berge's incremental transversal computation, one edge at a time.
  std::vector<VarSet> covers{VarSet{}};
  for (const auto& g : ideal.generators()) {
    const VarSet edge = g.support();
    std::vector<VarSet> next;
    next.reserve(covers.size() * static_cast<std::size_t>(edge.size()));
    for (auto t : covers) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (auto v : edge.elements()) next.push_back(t.with(v));
      }
    }
    covers = minimal_sets(std::move(next), ideal.vars());
  }
  return covers;
}

std::vector<VarSet> minimal_primes_bruteforce(const MonomialIdeal& ideal) {
  require_theorem_domain(ideal, "minimal_primes_bruteforce");
  if (ideal.vars() > 20) throw BudgetExceeded("brute-force transversals limited to 20 variables");
  std::vector<VarSet> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  std::vector<VarSet> covers;
  const std::uint64_t limit = std::uint64_t{1} << ideal.vars();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    VarSet s(bits);
    if (std::all_of(edges.begin(), edges.end(), [s](VarSet e) { return e.intersects(s); })) {
      covers.push_back(s);
    }
  }
  return minimal_sets(std::move(covers), ideal.vars());
}

MonomialIdeal prime_power(std::size_t vars, VarSet s, unsigned n) {
  auto idx = s.elements();
  std::vector<Monomial> gens;
  std::vector<Exponent> exps(vars, 0);
  // all compositions of n over the variables of s
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == idx.size()) {
      exps[idx[pos]] = left;
      gens.emplace_back(exps);
      exps[idx[pos]] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[idx[pos]] = e;
      self(self, pos + 1, left - e);
    }
    exps[idx[pos]] = 0;
  };
  if (idx.empty()) {
    if (n == 0) return MonomialIdeal::unit(vars);
    return MonomialIdeal(vars);
  }
  rec(rec, 0, n);
  return MonomialIdeal::normalize(std::move(gens), vars);
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n) {
  if (n == 0) throw DomainError("symbolic_power needs n >= 1");
  auto primes = minimal_primes(ideal);
  MonomialIdeal result = MonomialIdeal::unit(ideal.vars());
  for (auto s : primes) result = intersect(result, prime_power(ideal.vars(), s, n));
  return result;
}

std::uint64_t alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("alpha of the zero ideal");
  return ideal.generators().front().degree();
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(Monomial::indicator(ideal.vars(), g.support()));
  return MonomialIdeal::normalize(std::move(gens), ideal.vars());
}

std::size_t height(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  if (ideal.is_unit()) throw DomainError("height of the unit ideal");
  auto primes = minimal_primes(radical(ideal));
  std::size_t h = ideal.vars();
  for (auto s : primes) h = std::min<std::size_t>(h, static_cast<std::size_t>(s.size()));
  return h;
}

}  // namespace sfpow

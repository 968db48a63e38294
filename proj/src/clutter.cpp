#include "sfpow/clutter.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "sfpow/error.hpp"

namespace sfpow {

namespace {

bool edge_less(VarSet a, VarSet b, std::size_t n) {
  return grlex_less(Monomial::indicator(n, a), Monomial::indicator(n, b));
}

void sort_edges(std::vector<VarSet>& edges, std::size_t n) {
  std::sort(edges.begin(), edges.end(), [n](VarSet a, VarSet b) { return edge_less(a, b, n); });
}

void require_weights(const Clutter& clutter, std::span<const std::uint32_t> c) {
  if (c.size() != clutter.vertices()) {
    throw DimensionMismatch("weight vector has " + std::to_string(c.size()) + " entries, clutter has " +
                            std::to_string(clutter.vertices()) + " vertices");
  }
  if (clutter.is_unit()) throw DomainError("covering/packing programs of the unit clutter are unbounded");
}

// Depth-first branch and bound over x_0, x_1, ... with 0 tried before 1, so
// the first optimum reached is the lexicographically least.
class CoverSearch {
 public:
  static constexpr std::uint64_t kInfeasible = std::numeric_limits<std::uint64_t>::max() / 4;

  CoverSearch(const Clutter& clutter, std::span<const std::uint32_t> c)
      : n_(clutter.vertices()), edges_(clutter.edges().begin(), clutter.edges().end()), c_(c) {
    closing_.resize(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto elems = edges_[e].elements();
      closing_[elems.back()].push_back(e);
    }
    x_.assign(n_, 0);
  }

  IntOptimum run() {
    dfs(0, 0, VarSet{});
    IntOptimum out;
    out.value = best_;
    out.witness.assign(best_x_.begin(), best_x_.end());
    return out;
  }

 private:
  // Disjoint uncovered edges need distinct vertices among the undecided ones.
  std::uint64_t lower_bound(std::size_t next, VarSet chosen) const {
    std::uint64_t bound = 0;
    VarSet used;
    const VarSet undecided = VarSet::full(n_).minus(VarSet::full(next));
    for (auto e : edges_) {
      if (e.intersects(chosen)) continue;
      const VarSet open = e & undecided;
      if (open.empty()) return kInfeasible;
      if (open.intersects(used)) continue;
      std::uint64_t cheapest = std::numeric_limits<std::uint64_t>::max();
      for (auto v : open.elements()) cheapest = std::min<std::uint64_t>(cheapest, c_[v]);
      used = used | open;
      bound += cheapest;
    }
    return bound;
  }

  void dfs(std::size_t v, std::uint64_t cost, VarSet chosen) {
    if (have_best_ && cost + lower_bound(v, chosen) >= best_) return;
    if (v == n_) {
      best_ = cost;
      best_x_ = x_;
      have_best_ = true;
      return;
    }
    // x_v = 0: every edge whose last vertex is v must already be covered
    bool ok = std::all_of(closing_[v].begin(), closing_[v].end(),
                          [&](std::size_t e) { return edges_[e].intersects(chosen); });
    if (ok) dfs(v + 1, cost, chosen);
    x_[v] = 1;
    dfs(v + 1, cost + c_[v], chosen.with(v));
    x_[v] = 0;
  }

  std::size_t n_;
  std::vector<VarSet> edges_;
  std::span<const std::uint32_t> c_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> best_x_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

// Depth-first search over y_0, y_1, ... in increasing order with residual
// capacities; accepts only strict improvements so the lexicographically least
// optimum is kept.
class PackingSearch {
 public:
  PackingSearch(const Clutter& clutter, std::span<const std::uint32_t> c)
      : edges_(clutter.edges().begin(), clutter.edges().end()), residual_(c.begin(), c.end()) {
    y_.assign(edges_.size(), 0);
    best_y_ = y_;
    min_size_suffix_.assign(edges_.size() + 1, std::numeric_limits<int>::max());
    union_suffix_.assign(edges_.size() + 1, VarSet{});
    for (std::size_t e = edges_.size(); e-- > 0;) {
      min_size_suffix_[e] = std::min(min_size_suffix_[e + 1], edges_[e].size());
      union_suffix_[e] = union_suffix_[e + 1] | edges_[e];
    }
  }

  IntOptimum run() {
    dfs(0, 0);
    IntOptimum out;
    out.value = best_;
    out.witness = best_y_;
    return out;
  }

 private:
  std::uint64_t capacity(std::size_t e) const {
    std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    for (auto v : edges_[e].elements()) cap = std::min(cap, residual_[v]);
    return cap;
  }

  std::uint64_t upper_bound(std::size_t from) const {
    if (from == edges_.size()) return 0;
    std::uint64_t per_edge = 0;
    for (std::size_t e = from; e < edges_.size(); ++e) per_edge += capacity(e);
    std::uint64_t mass = 0;
    for (auto v : union_suffix_[from].elements()) mass += residual_[v];
    return std::min(per_edge, mass / static_cast<std::uint64_t>(min_size_suffix_[from]));
  }

  void dfs(std::size_t e, std::uint64_t value) {
    if (e == edges_.size()) {
      if (value > best_) {
        best_ = value;
        best_y_ = y_;
      }
      return;
    }
    if (value + upper_bound(e) <= best_) return;
    const std::uint64_t cap = capacity(e);
    auto elems = edges_[e].elements();
    for (std::uint64_t k = 0; k <= cap; ++k) {
      if (k > 0) {
        for (auto v : elems) residual_[v] -= 1;
      }
      y_[e] = k;
      dfs(e + 1, value + k);
    }
    for (auto v : elems) residual_[v] += cap;
    y_[e] = 0;
  }

  std::vector<VarSet> edges_;
  std::vector<std::uint64_t> residual_;
  std::vector<std::uint64_t> y_;
  std::vector<std::uint64_t> best_y_;
  std::vector<int> min_size_suffix_;
  std::vector<VarSet> union_suffix_;
  std::uint64_t best_ = 0;
};

WeightVector decode(std::uint64_t index, std::size_t n, std::uint32_t cap) {
  WeightVector c(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(index % (cap + 1));
    index /= cap + 1;
  }
  return c;
}

bool orbit_minimal(const WeightVector& c, const std::vector<std::vector<std::size_t>>& autos) {
  WeightVector image(c.size());
  for (const auto& perm : autos) {
    for (std::size_t v = 0; v < c.size(); ++v) image[perm[v]] = c[v];
    if (image < c) return false;
  }
  return true;
}

}  // namespace

Clutter::Clutter(std::size_t vertices, std::vector<VarSet> edges) : vertices_(vertices) {
  if (vertices > VarSet::kMaxVars) throw MalformedInput("clutters support at most 64 vertices");
  const VarSet all = VarSet::full(vertices);
  for (auto e : edges) {
    if (!e.is_subset_of(all)) throw MalformedInput("edge references a vertex outside the clutter");
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      if (a != b && edges[a].is_subset_of(edges[b])) {
        throw MalformedInput("edges are not pairwise inclusion-incomparable");
      }
    }
  }
  sort_edges(edges, vertices);
  edges_ = std::move(edges);
}

Clutter Clutter::minimalized(std::size_t vertices, std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  for (auto s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [s](VarSet k) { return k.is_subset_of(s); })) kept.push_back(s);
  }
  return Clutter(vertices, std::move(kept));
}

std::vector<std::vector<int>> Clutter::incidence() const {
  std::vector<std::vector<int>> m(vertices_, std::vector<int>(edges_.size(), 0));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (auto v : edges_[e].elements()) m[v][e] = 1;
  }
  return m;
}

std::string Clutter::to_string() const {
  std::ostringstream os;
  os << "clutter on " << vertices_ << " vertices: {";
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (e) os << ", ";
    os << '{';
    auto elems = edges_[e].elements();
    for (std::size_t k = 0; k < elems.size(); ++k) os << (k ? "," : "") << elems[k] + 1;
    os << '}';
  }
  os << '}';
  return os.str();
}

Clutter clutter_from_ideal(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw DomainError("clutter_from_ideal: ideal is not square-free");
  std::vector<VarSet> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  return Clutter(ideal.vars(), std::move(edges));
}

MonomialIdeal ideal_from_clutter(const Clutter& clutter) {
  std::vector<Monomial> gens;
  for (auto e : clutter.edges()) gens.push_back(Monomial::indicator(clutter.vertices(), e));
  return MonomialIdeal::normalize(std::move(gens), clutter.vertices());
}

IntOptimum gamma(const Clutter& clutter, std::span<const std::uint32_t> c) {
  require_weights(clutter, c);
  if (std::all_of(c.begin(), c.end(), [](std::uint32_t w) { return w == 0; })) {
    return IntOptimum{0, std::vector<std::uint64_t>(clutter.vertices(), 1)};
  }
  return CoverSearch(clutter, c).run();
}

IntOptimum sigma(const Clutter& clutter, std::span<const std::uint32_t> c) {
  require_weights(clutter, c);
  return PackingSearch(clutter, c).run();
}

CoverPackingResult cover_packing(const Clutter& clutter, std::span<const std::uint32_t> c) {
  auto g = gamma(clutter, c);
  auto s = sigma(clutter, c);
  CoverPackingResult out;
  out.gamma = g.value;
  out.sigma = s.value;
  out.cover_witness = std::move(g.witness);
  out.packing_witness = std::move(s.witness);
  out.packs = out.gamma == out.sigma;
  return out;
}

bool packs_for(const Clutter& clutter, std::span<const std::uint32_t> c) {
  return gamma(clutter, c).value == sigma(clutter, c).value;
}

std::uint32_t mfmc_weight_cap(const Clutter& clutter) {
  return static_cast<std::uint32_t>((clutter.edge_count() + 1) / 2);
}

std::uint64_t mfmc_sweep_size(const Clutter& clutter, std::uint64_t budget) {
  const std::uint64_t base = mfmc_weight_cap(clutter) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < clutter.vertices(); ++i) {
    if (total > budget / base) {
      throw BudgetExceeded("MFMC sweep needs " + std::to_string(base) + "^" +
                           std::to_string(clutter.vertices()) + " weight vectors, over the budget of " +
                           std::to_string(budget) + "; use the ideal-equality route instead");
    }
    total *= base;
  }
  if (total > budget) throw BudgetExceeded("MFMC sweep over budget");
  return total;
}

MfmcResult mfmc_check_serial(const Clutter& clutter, const MfmcOptions& options) {
  if (clutter.is_unit()) throw DomainError("mfmc_check: unit clutter");
  const auto total = mfmc_sweep_size(clutter, options.budget);
  const auto cap = mfmc_weight_cap(clutter);
  std::vector<std::vector<std::size_t>> autos;
  if (options.use_symmetry) autos = automorphisms(clutter);
  MfmcResult out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto c = decode(idx, clutter.vertices(), cap);
    if (options.use_symmetry && !orbit_minimal(c, autos)) continue;
    ++out.vectors_checked;
    if (!packs_for(clutter, c)) {
      out.mfmc = false;
      out.failing_c = std::move(c);
      break;
    }
  }
  return out;
}

MfmcResult mfmc_check(const Clutter& clutter, const MfmcOptions& options) {
  if (clutter.is_unit()) throw DomainError("mfmc_check: unit clutter");
  const auto total = mfmc_sweep_size(clutter, options.budget);
  const auto cap = mfmc_weight_cap(clutter);
  std::vector<std::vector<std::size_t>> autos;
  if (options.use_symmetry) autos = automorphisms(clutter);

  std::atomic<std::uint64_t> first_failure{total};
  std::atomic<std::uint64_t> checked{0};
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::uint64_t>(k);
    // indices past a known failure cannot change the lexicographic answer
    if (idx > first_failure.load(std::memory_order_relaxed)) continue;
    auto c = decode(idx, clutter.vertices(), cap);
    if (options.use_symmetry && !orbit_minimal(c, autos)) continue;
    checked.fetch_add(1, std::memory_order_relaxed);
    if (!packs_for(clutter, c)) {
      auto seen = first_failure.load();
      while (idx < seen && !first_failure.compare_exchange_weak(seen, idx)) {
      }
    }
  }

  MfmcResult out;
  out.vectors_checked = checked.load();
  if (first_failure.load() < total) {
    out.mfmc = false;
    out.failing_c = decode(first_failure.load(), clutter.vertices(), cap);
  }
  return out;
}

std::vector<SweepRow> packing_sweep(const Clutter& clutter, std::uint64_t budget) {
  if (clutter.is_unit()) throw DomainError("packing_sweep: unit clutter");
  const auto total = mfmc_sweep_size(clutter, budget);
  const auto cap = mfmc_weight_cap(clutter);
  std::vector<SweepRow> rows(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    auto& row = rows[k];
    row.c = decode(static_cast<std::uint64_t>(k), clutter.vertices(), cap);
    row.gamma = gamma(clutter, row.c).value;
    row.sigma = sigma(clutter, row.c).value;
  }
  return rows;
}

std::vector<std::vector<std::size_t>> automorphisms(const Clutter& clutter) {
  const auto n = clutter.vertices();
  if (n > 8) throw BudgetExceeded("automorphism search limited to 8 vertices");
  std::set<std::uint64_t> edge_bits;
  for (auto e : clutter.edges()) edge_bits.insert(e.bits());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool preserves = true;
    for (auto e : clutter.edges()) {
      VarSet image;
      for (auto v : e.elements()) image = image.with(perm[v]);
      if (!edge_bits.count(image.bits())) {
        preserves = false;
        break;
      }
    }
    if (preserves) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t cover_number(const Clutter& clutter) {
  if (clutter.is_unit()) return 0;
  const WeightVector ones(clutter.vertices(), 1);
  return gamma(clutter, ones).value;
}

std::uint64_t matching_number(const Clutter& clutter) {
  if (clutter.is_unit()) return 0;
  const WeightVector ones(clutter.vertices(), 1);
  return sigma(clutter, ones).value;
}

bool is_konig(const Clutter& clutter) {
  if (clutter.is_unit()) return true;  // height 0 by convention
  return cover_number(clutter) == matching_number(clutter);
}

Clutter minor(const Clutter& clutter, VarSet zeros, VarSet ones) {
  if (zeros.intersects(ones)) throw DomainError("minor: a vertex is set to both 0 and 1");
  const VarSet all = VarSet::full(clutter.vertices());
  if (!zeros.is_subset_of(all) || !ones.is_subset_of(all)) {
    throw DomainError("minor: vertex outside the clutter");
  }
  std::vector<VarSet> sets;
  for (auto e : clutter.edges()) {
    if (e.intersects(zeros)) continue;
    sets.push_back(e.minus(ones));
  }
  return Clutter::minimalized(clutter.vertices(), std::move(sets));
}

PackedResult is_packed(const Clutter& clutter, std::size_t vertex_limit) {
  const auto n = clutter.vertices();
  if (n > vertex_limit) {
    throw BudgetExceeded("is_packed enumerates 3^n minors; n = " + std::to_string(n) +
                         " exceeds the limit " + std::to_string(vertex_limit));
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;

  std::set<std::vector<std::uint64_t>> seen;
  PackedResult out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // base-3 digits, vertex 0 most significant: 0 free, 1 set to 0, 2 set to 1
    VarSet zeros;
    VarSet ones;
    std::uint64_t rest = idx;
    for (std::size_t v = n; v-- > 0;) {
      auto digit = rest % 3;
      rest /= 3;
      if (digit == 1) zeros = zeros.with(v);
      if (digit == 2) ones = ones.with(v);
    }
    auto m = minor(clutter, zeros, ones);
    std::vector<std::uint64_t> key;
    for (auto e : m.edges()) key.push_back(e.bits());
    if (!seen.insert(std::move(key)).second) continue;
    if (!is_konig(m)) {
      out.packed = false;
      out.failing_zeros = zeros;
      out.failing_ones = ones;
      break;
    }
  }
  out.distinct_minors = seen.size();
  return out;
}

LpMembership membership_via_lp(const Clutter& clutter, std::span<const std::uint32_t> c, unsigned t) {
  if (t == 0) throw DomainError("membership_via_lp needs t >= 1");
  return LpMembership{t <= gamma(clutter, c).value, t <= sigma(clutter, c).value};
}

}  // namespace sfpow

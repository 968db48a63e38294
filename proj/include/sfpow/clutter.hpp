#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfpow/ideal.hpp"
#include "sfpow/monomial.hpp"

namespace sfpow {

/// Non-negative integer weights on vertices.
using WeightVector = std::vector<std::uint32_t>;

/// A family of pairwise inclusion-incomparable subsets of {0..n-1}.
///
/// Edges are kept in the canonical order of their indicator monomials so a
/// clutter and its edge ideal list their members in the same order. The unit
/// clutter has the single edge ∅ and corresponds to the unit ideal.
class Clutter {
 public:
  Clutter() = default;
  /// Validates that the edges are in range and pairwise incomparable.
  Clutter(std::size_t vertices, std::vector<VarSet> edges);

  /// Keeps only the inclusion-minimal sets of `sets`.
  static Clutter minimalized(std::size_t vertices, std::vector<VarSet> sets);

  std::size_t vertices() const { return vertices_; }
  std::span<const VarSet> edges() const& { return edges_; }
  std::vector<VarSet> edges() && { return std::move(edges_); }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_unit() const { return edges_.size() == 1 && edges_.front().empty(); }

  /// The n x m 0/1 incidence matrix, row-major.
  std::vector<std::vector<int>> incidence() const;

  std::string to_string() const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<VarSet> edges_;
};

Clutter clutter_from_ideal(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_clutter(const Clutter& clutter);

struct IntOptimum {
  std::uint64_t value = 0;
  /// gamma: 0/1 per vertex. sigma: multiplicity per edge.
  std::vector<std::uint64_t> witness;
};

/// min c.x over x in Z^n_{>=0} with every edge covered. The optimum is always
/// attained by a 0/1 vector (lowering any coordinate above 1 keeps every
/// covering constraint), so the search runs over vertex subsets. The witness
/// is the lexicographically least optimal 0/1 vector, except for c = 0 where
/// it is the all-ones vector.
IntOptimum gamma(const Clutter& clutter, std::span<const std::uint32_t> c);

/// max 1.y over y in Z^m_{>=0} with M y <= c; lexicographically least
/// optimal y.
IntOptimum sigma(const Clutter& clutter, std::span<const std::uint32_t> c);

struct CoverPackingResult {
  std::uint64_t gamma = 0;
  std::uint64_t sigma = 0;
  std::vector<std::uint64_t> cover_witness;
  std::vector<std::uint64_t> packing_witness;
  bool packs = false;
};

CoverPackingResult cover_packing(const Clutter& clutter, std::span<const std::uint32_t> c);
bool packs_for(const Clutter& clutter, std::span<const std::uint32_t> c);

struct MfmcOptions {
  /// Refuse sweeps with more weight vectors than this.
  std::uint64_t budget = 100'000'000;
  /// Only test weight vectors that are lexicographically least in their
  /// orbit under the clutter's automorphism group (n <= 8).
  bool use_symmetry = false;
};

struct MfmcResult {
  bool mfmc = true;
  /// Lexicographically first c in {0..ceil(m/2)}^n that does not pack.
  std::optional<WeightVector> failing_c;
  std::uint64_t vectors_checked = 0;
};

struct SweepRow {
  WeightVector c;
  std::uint64_t gamma = 0;
  std::uint64_t sigma = 0;
};

/// ceil(m/2), the per-vertex weight cap of the finite MFMC sweep.
std::uint32_t mfmc_weight_cap(const Clutter& clutter);

/// Number of weight vectors in the sweep; throws BudgetExceeded over budget.
std::uint64_t mfmc_sweep_size(const Clutter& clutter, std::uint64_t budget);

/// OpenMP sweep; the reported failure is the lexicographic first one
/// independently of thread scheduling.
MfmcResult mfmc_check(const Clutter& clutter, const MfmcOptions& options = {});
/// Serial reference sweep.
MfmcResult mfmc_check_serial(const Clutter& clutter, const MfmcOptions& options = {});

/// gamma and sigma for every c in the sweep box, in lexicographic order of c.
std::vector<SweepRow> packing_sweep(const Clutter& clutter, std::uint64_t budget);

/// Vertex permutations preserving the edge set; brute force, n <= 8.
std::vector<std::vector<std::size_t>> automorphisms(const Clutter& clutter);

/// gamma(1_n); 0 for the unit clutter.
std::uint64_t cover_number(const Clutter& clutter);
/// sigma(1_n); 0 for the unit clutter.
std::uint64_t matching_number(const Clutter& clutter);
bool is_konig(const Clutter& clutter);

/// Sets the vertices in `zeros` to 0 (deleting the edges through them) and the
/// vertices in `ones` to 1 (removing them from every edge), then keeps the
/// inclusion-minimal edges. Vertex indices are preserved; removed vertices are
/// left isolated.
Clutter minor(const Clutter& clutter, VarSet zeros, VarSet ones);

struct PackedResult {
  bool packed = true;
  std::optional<VarSet> failing_zeros;
  std::optional<VarSet> failing_ones;
  std::uint64_t distinct_minors = 0;
};

/// Tests is_konig on every minor. Throws BudgetExceeded when the vertex count
/// exceeds `vertex_limit`.
PackedResult is_packed(const Clutter& clutter, std::size_t vertex_limit = 12);

struct LpMembership {
  bool in_symbolic = false;
  bool in_ordinary = false;
};

/// (t <= gamma(c), t <= sigma(c)): membership of v^c in I^(t) and I^t.
LpMembership membership_via_lp(const Clutter& clutter, std::span<const std::uint32_t> c, unsigned t);

}  // namespace sfpow

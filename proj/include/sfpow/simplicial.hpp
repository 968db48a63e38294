#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sfpow/monomial.hpp"

namespace sfpow {

/// A simplicial complex on vertices {0..n-1}, stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex {∅} has the
/// empty face only. They are different: the irrelevant complex has reduced
/// homology in degree -1.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::size_t vertices);
  static SimplicialComplex irrelevant(std::size_t vertices);
  /// Downward closure of `faces`.
  static SimplicialComplex generated_by(std::size_t vertices, std::vector<VarSet> faces);
  static SimplicialComplex simplex(std::size_t vertices, VarSet facet);

  std::size_t vertices() const { return vertices_; }
  bool is_void() const { return facets_.empty(); }
  const std::vector<VarSet>& facets() const { return facets_; }

  /// Every face, including ∅ for a non-void complex, sorted by size then bits.
  std::vector<VarSet> faces() const;
  bool contains(VarSet face) const;

  /// Sum over faces of (-1)^(|F|-1), the empty face included.
  long reduced_euler_characteristic() const;

 private:
  std::size_t vertices_ = 0;
  std::vector<VarSet> facets_;
};

/// Nonzero ranks of reduced homology, keyed by degree (degree -1 is possible
/// for the irrelevant complex). `field_char` is 0 (rationals) or a prime.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, unsigned field_char);

}  // namespace sfpow

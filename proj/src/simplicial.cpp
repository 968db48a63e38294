#include "sfpow/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sfpow/error.hpp"
#include "sfpow/field.hpp"
#include "sfpow/linalg.hpp"

namespace sfpow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

void require_field_characteristic(unsigned ch) {
  if (ch == 0) return;
  if (!is_prime(ch) || ch >= (1U << 31)) {
    throw DomainError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(ch));
  }
}

namespace {

std::vector<VarSet> maximal_sets(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VarSet> kept;
  for (auto s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [s](VarSet k) { return s.is_subset_of(k); })) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), [](VarSet a, VarSet b) { return a.bits() < b.bits(); });
  return kept;
}

template <class Field>
std::map<int, std::size_t> homology_ranks(const Field& f, const SimplicialComplex& complex) {
  std::map<int, std::size_t> out;
  if (complex.is_void()) return out;
  const auto faces = complex.faces();
  // faces grouped by dimension; dimension k lives at index k+1
  std::vector<std::vector<VarSet>> by_dim;
  for (auto face : faces) {
    const auto idx = static_cast<std::size_t>(face.size());
    if (by_dim.size() <= idx) by_dim.resize(idx + 1);
    by_dim[idx].push_back(face);
  }
  const std::size_t top = by_dim.size();
  // rank of the boundary from index k to index k-1
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    const auto& rows = by_dim[k - 1];
    const auto& cols = by_dim[k];
    std::map<std::uint64_t, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r].bits()] = r;
    linalg::Matrix<typename Field::Element> m(rows.size(), std::vector<typename Field::Element>(cols.size(), f.zero()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto elems = cols[c].elements();
      for (std::size_t pos = 0; pos < elems.size(); ++pos) {
        auto r = row_index.at(cols[c].without(elems[pos]).bits());
        m[r][c] = f.from_int(pos % 2 == 0 ? 1 : -1);
      }
    }
    boundary_rank[k] = linalg::rank(f, std::move(m), cols.size());
  }
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t h = by_dim[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    if (h != 0) out[static_cast<int>(k) - 1] = h;
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertices) {
  SimplicialComplex k;
  k.vertices_ = vertices;
  return k;
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t vertices) {
  SimplicialComplex k;
  k.vertices_ = vertices;
  k.facets_.push_back(VarSet{});
  return k;
}

SimplicialComplex SimplicialComplex::generated_by(std::size_t vertices, std::vector<VarSet> faces) {
  const VarSet all = VarSet::full(vertices);
  for (auto f : faces) {
    if (!f.is_subset_of(all)) throw MalformedInput("face references a vertex outside the complex");
  }
  SimplicialComplex k;
  k.vertices_ = vertices;
  k.facets_ = maximal_sets(std::move(faces));
  return k;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t vertices, VarSet facet) {
  return generated_by(vertices, {facet});
}

std::vector<VarSet> SimplicialComplex::faces() const {
  std::set<std::uint64_t> seen;
  for (auto facet : facets_) {
    // enumerate all subsets of the facet's bit mask
    const auto bits = facet.bits();
    for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<VarSet> out;
  out.reserve(seen.size());
  for (auto b : seen) out.emplace_back(b);
  std::sort(out.begin(), out.end(), [](VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  return out;
}

bool SimplicialComplex::contains(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VarSet f) { return face.is_subset_of(f); });
}

long SimplicialComplex::reduced_euler_characteristic() const {
  long chi = 0;
  for (auto face : faces()) chi += (face.size() % 2 == 1) ? 1 : -1;
  return chi;
}

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, unsigned field_char) {
  require_field_characteristic(field_char);
  if (field_char == 0) return homology_ranks(RationalField{}, complex);
  return homology_ranks(PrimeField{field_char}, complex);
}

}  // namespace sfpow

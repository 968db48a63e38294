#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sfpow::linalg {

template <class E>
using Matrix = std::vector<std::vector<E>>;  // row-major

/// Row-reduces `m` in place to reduced row echelon form; returns the pivot
/// column of each nonzero row.
template <class Field>
std::vector<std::size_t> rref(const Field& f, Matrix<typename Field::Element>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && f.is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const auto inv_lead = f.div(f.one(), m[row][col]);
    for (std::size_t k = col; k < cols; ++k) m[row][k] = f.mul(m[row][k], inv_lead);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || f.is_zero(m[r][col])) continue;
      const auto factor = m[r][col];
      for (std::size_t k = col; k < cols; ++k) {
        if (!f.is_zero(m[row][k])) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Rank by forward elimination only.
template <class Field>
std::size_t rank(const Field& f, Matrix<typename Field::Element> m, std::size_t cols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && f.is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const auto inv_lead = f.div(f.one(), m[row][col]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (f.is_zero(m[r][col])) continue;
      const auto factor = f.mul(m[r][col], inv_lead);
      for (std::size_t k = col; k < cols; ++k) {
        if (!f.is_zero(m[row][k])) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
      }
    }
    ++row;
  }
  return row;
}

/// Basis of the null space {v : m v = 0}.
template <class Field>
Matrix<typename Field::Element> kernel_basis(const Field& f, Matrix<typename Field::Element> m, std::size_t cols) {
  auto pivots = rref(f, m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  Matrix<typename Field::Element> basis;
  for (std::size_t freecol = 0; freecol < cols; ++freecol) {
    if (is_pivot[freecol]) continue;
    std::vector<typename Field::Element> v(cols, f.zero());
    v[freecol] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][freecol]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incrementally maintained span of vectors of a fixed length.
template <class Field>
class EchelonSpan {
 public:
  using Element = typename Field::Element;

  EchelonSpan(const Field& f, std::size_t length) : f_(f), length_(length) {}

  std::size_t dimension() const { return rows_.size(); }

  /// Adds `v` to the span; returns false if it was already inside.
  bool insert(std::vector<Element> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < length_ && f_.is_zero(v[lead])) ++lead;
    if (lead == length_) return false;
    const auto inv_lead = f_.div(f_.one(), v[lead]);
    for (std::size_t k = lead; k < length_; ++k) v[k] = f_.mul(v[k], inv_lead);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

 private:
  void reduce(std::vector<Element>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto lead = leads_[r];
      if (f_.is_zero(v[lead])) continue;
      const auto factor = v[lead];
      for (std::size_t k = lead; k < length_; ++k) {
        if (!f_.is_zero(rows_[r][k])) v[k] = f_.sub(v[k], f_.mul(factor, rows_[r][k]));
      }
    }
  }

  const Field& f_;
  std::size_t length_;
  Matrix<Element> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace sfpow::linalg

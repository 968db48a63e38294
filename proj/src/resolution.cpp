#include "sfpow/resolution.hpp"

#include <algorithm>
#include <unordered_map>

#include "sfpow/error.hpp"
#include "sfpow/linalg.hpp"

namespace sfpow {

namespace {

std::vector<std::size_t> active_below(const std::vector<Monomial>& twists, const Monomial& b) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < twists.size(); ++k) {
    if (twists[k].divides(b)) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> active_above(const std::vector<Monomial>& twists, const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < twists.size(); ++k) {
    if (m.divides(twists[k])) out.push_back(k);
  }
  return out;
}

}  // namespace

template <class Field>
std::size_t MinimalResolution<Field>::rank_between(std::size_t i, const std::vector<std::size_t>& rows,
                                                   const std::vector<std::size_t>& cols) const {
  if (rows.empty() || cols.empty() || i >= boundary_.size()) return 0;
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t r = 0; r < rows.size(); ++r) local[rows[r]] = r;
  // transpose: one row per column generator keeps elimination rows short
  linalg::Matrix<Element> m(cols.size(), std::vector<Element>(rows.size(), field_.zero()));
  bool any = false;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& term : boundary_[i][cols[c]]) {
      auto it = local.find(term.row);
      if (it == local.end()) continue;
      m[c][it->second] = term.coeff;
      any = true;
    }
  }
  if (!any) return 0;
  return linalg::rank(field_, std::move(m), rows.size());
}

template <class Field>
MinimalResolution<Field> MinimalResolution<Field>::build(const Field& field, const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw DomainError("resolution of a zero or unit ideal");
  MinimalResolution res(field);
  res.vars_ = ideal.vars();
  const std::size_t d = ideal.vars();
  res.twists_.assign(d + 2, {});
  res.boundary_.assign(d + 2, {});
  res.twists_[0].push_back(Monomial(d));

  for (const auto& b : lcm_lattice(ideal)) {
    std::vector<std::vector<std::size_t>> active(d + 2);
    for (std::size_t i = 0; i < d + 2; ++i) active[i] = active_below(res.twists_[i], b);

    // ranks before anything is added at b; additions at position i do not
    // change the homology at i+1 (new columns are independent mod the image)
    std::vector<std::size_t> ranks(d + 3, 0);
    for (std::size_t i = 1; i < d + 2; ++i) ranks[i] = res.rank_between(i, active[i - 1], active[i]);

    for (std::size_t i = 0; i + 1 < d + 2; ++i) {
      // b lies in the lcm lattice, so x^b ∈ J and all of (F_0)_b must be hit
      const std::size_t missing = active[i].size() - (i == 0 ? 0 : ranks[i]) - ranks[i + 1];
      if (missing == 0) continue;

      const auto& rows = active[i];
      linalg::Matrix<Element> kernel;
      if (i == 0) {
        kernel.push_back({field.one()});
      } else {
        std::unordered_map<std::size_t, std::size_t> local;
        for (std::size_t r = 0; r < active[i - 1].size(); ++r) local[active[i - 1][r]] = r;
        linalg::Matrix<Element> m(active[i - 1].size(), std::vector<Element>(rows.size(), field.zero()));
        for (std::size_t c = 0; c < rows.size(); ++c) {
          for (const auto& term : res.boundary_[i][rows[c]]) m[local.at(term.row)][c] = term.coeff;
        }
        kernel = linalg::kernel_basis(field, std::move(m), rows.size());
      }

      std::unordered_map<std::size_t, std::size_t> local;
      for (std::size_t r = 0; r < rows.size(); ++r) local[rows[r]] = r;
      linalg::EchelonSpan<Field> image(field, rows.size());
      for (auto col : active[i + 1]) {
        std::vector<Element> v(rows.size(), field.zero());
        for (const auto& term : res.boundary_[i + 1][col]) v[local.at(term.row)] = term.coeff;
        image.insert(std::move(v));
      }

      std::size_t added = 0;
      for (auto& z : kernel) {
        if (added == missing) break;
        if (!image.insert(z)) continue;
        std::vector<Term> column;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (!field.is_zero(z[r])) column.push_back(Term{rows[r], z[r]});
        }
        res.twists_[i + 1].push_back(b);
        res.boundary_[i + 1].push_back(std::move(column));
        ++added;
      }
      if (added != missing) throw std::logic_error("resolution: homology basis incomplete");
    }
  }

  while (res.twists_.size() > 1 && res.twists_.back().empty()) {
    res.twists_.pop_back();
    res.boundary_.pop_back();
  }
  if (res.twists_.size() > d + 1) throw std::logic_error("resolution longer than the number of variables");
  return res;
}

template <class Field>
BettiTable MinimalResolution<Field>::betti() const {
  std::vector<BettiEntry> entries;
  for (std::size_t i = 1; i < twists_.size(); ++i) {
    std::vector<Monomial> sorted = twists_[i];
    std::sort(sorted.begin(), sorted.end(), grlex_less);
    for (std::size_t k = 0; k < sorted.size();) {
      std::size_t run = k;
      while (run < sorted.size() && sorted[run] == sorted[k]) ++run;
      entries.push_back(BettiEntry{static_cast<int>(i) - 1, sorted[k], run - k});
      k = run;
    }
  }
  return BettiTable(vars_, std::move(entries));
}

template <class Field>
std::size_t MinimalResolution<Field>::ext_dimension(std::size_t j, const Monomial& m) const {
  if (m.vars() != vars_) throw DimensionMismatch("ext_dimension: multidegree has the wrong length");
  if (j >= twists_.size()) return 0;
  const auto here = active_above(twists_[j], m);
  if (here.empty()) return 0;
  std::size_t rank_out = 0;
  if (j + 1 < twists_.size()) rank_out = rank_between(j + 1, here, active_above(twists_[j + 1], m));
  std::size_t rank_in = 0;
  if (j >= 1) rank_in = rank_between(j, active_above(twists_[j - 1], m), here);
  return here.size() - rank_out - rank_in;
}

template <class Field>
bool MinimalResolution<Field>::is_complex() const {
  for (std::size_t i = 2; i < twists_.size(); ++i) {
    for (const auto& column : boundary_[i]) {
      std::unordered_map<std::size_t, Element> acc;
      for (const auto& term : column) {
        for (const auto& inner : boundary_[i - 1][term.row]) {
          auto [it, fresh] = acc.try_emplace(inner.row, field_.zero());
          it->second = field_.add(it->second, field_.mul(term.coeff, inner.coeff));
        }
      }
      for (const auto& [row, value] : acc) {
        if (!field_.is_zero(value)) return false;
      }
    }
  }
  return true;
}

template class MinimalResolution<RationalField>;
template class MinimalResolution<PrimeField>;

}  // namespace sfpow

#include "sfpow/betti.hpp"

#include <algorithm>
#include <unordered_set>

#include "sfpow/error.hpp"
#include "sfpow/field.hpp"

namespace sfpow {

namespace {

void require_resolvable(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DomainError(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw DomainError(std::string(op) + ": unit ideal");
  if (ideal.vars() > VarSet::kMaxVars) throw DomainError(std::string(op) + ": more than 64 variables");
}

bool entry_less(const BettiEntry& a, const BettiEntry& b) {
  if (a.i != b.i) return a.i < b.i;
  return grlex_less(a.b, b.b);
}

std::vector<BettiEntry> entries_at(const MonomialIdeal& ideal, const Monomial& b, unsigned ch) {
  std::vector<BettiEntry> out;
  for (auto [deg, rank] : reduced_homology_ranks(upper_koszul_complex(ideal, b), ch)) {
    out.push_back(BettiEntry{deg + 1, b, rank});
  }
  return out;
}

}  // namespace

BettiTable::BettiTable(std::size_t vars, std::vector<BettiEntry> entries) : vars_(vars) {
  std::erase_if(entries, [](const BettiEntry& e) { return e.rank == 0; });
  std::sort(entries.begin(), entries.end(), entry_less);
  entries_ = std::move(entries);
}

std::size_t BettiTable::ideal_rank(int i, const Monomial& b) const {
  for (const auto& e : entries_) {
    if (e.i == i && e.b == b) return e.rank;
  }
  return 0;
}

std::size_t BettiTable::quotient_rank(int i, const Monomial& b) const {
  if (i == 0) return b.is_one() ? 1 : 0;
  return ideal_rank(i - 1, b);
}

std::map<std::pair<int, long>, std::size_t> BettiTable::graded_quotient() const {
  std::map<std::pair<int, long>, std::size_t> out;
  out[{0, 0}] = 1;
  for (const auto& e : entries_) out[{e.i + 1, static_cast<long>(e.b.degree())}] += e.rank;
  return out;
}

int BettiTable::projdim_quotient() const {
  int pd = 0;
  for (const auto& e : entries_) pd = std::max(pd, e.i + 1);
  return pd;
}

long BettiTable::regularity_quotient() const {
  long reg = 0;
  for (const auto& e : entries_) reg = std::max(reg, static_cast<long>(e.b.degree()) - (e.i + 1));
  return reg;
}

std::size_t BettiTable::total_ideal_rank() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.rank;
  return total;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t limit) {
  std::unordered_set<Monomial, MonomialHash> lattice;
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial> fresh{g};
    for (const auto& l : lattice) fresh.push_back(l.lcm(g));
    for (auto& m : fresh) lattice.insert(std::move(m));
    if (lattice.size() > limit) {
      throw BudgetExceeded("lcm lattice exceeds " + std::to_string(limit) + " points");
    }
  }
  std::vector<Monomial> out(lattice.begin(), lattice.end());
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
  if (b.vars() != ideal.vars()) throw DimensionMismatch("upper_koszul_complex: variable count mismatch");
  const VarSet supp = b.support();
  std::vector<VarSet> faces;
  const auto bits = supp.bits();
  for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
    VarSet sigma(sub);
    if (contains_monomial(ideal, b.quotient(Monomial::indicator(b.vars(), sigma)))) faces.push_back(sigma);
    if (sub == 0) break;
  }
  if (faces.empty()) return SimplicialComplex::void_complex(b.vars());
  return SimplicialComplex::generated_by(b.vars(), std::move(faces));
}

BettiTable betti_numbers_serial(const MonomialIdeal& ideal, unsigned field_char) {
  require_resolvable(ideal, "betti_numbers");
  require_field_characteristic(field_char);
  std::vector<BettiEntry> entries;
  for (const auto& b : lcm_lattice(ideal)) {
    auto here = entries_at(ideal, b, field_char);
    entries.insert(entries.end(), here.begin(), here.end());
  }
  return BettiTable(ideal.vars(), std::move(entries));
}

BettiTable betti_numbers(const MonomialIdeal& ideal, unsigned field_char) {
  require_resolvable(ideal, "betti_numbers");
  require_field_characteristic(field_char);
  const auto lattice = lcm_lattice(ideal);
  std::vector<std::vector<BettiEntry>> per_point(lattice.size());
  const auto count = static_cast<std::int64_t>(lattice.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) per_point[k] = entries_at(ideal, lattice[k], field_char);
  std::vector<BettiEntry> entries;
  for (auto& here : per_point) entries.insert(entries.end(), here.begin(), here.end());
  return BettiTable(ideal.vars(), std::move(entries));
}

}  // namespace sfpow

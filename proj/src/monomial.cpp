#include "sfpow/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "sfpow/error.hpp"

namespace sfpow {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw ExponentOverflow("exponent overflow in monomial product");
  }
  return a + b;
}

Exponent checked_mul(Exponent a, Exponent b) {
  if (b != 0 && a > std::numeric_limits<Exponent>::max() / b) {
    throw ExponentOverflow("exponent overflow in monomial scaling");
  }
  return a * b;
}

void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) {
    throw DimensionMismatch("monomials over " + std::to_string(a.vars()) + " and " +
                            std::to_string(b.vars()) + " variables");
  }
}

}  // namespace

VarSet::VarSet(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) bits_ |= std::uint64_t{1} << i;
}

VarSet VarSet::full(std::size_t count) {
  if (count >= kMaxVars) return VarSet(~std::uint64_t{0});
  return VarSet((std::uint64_t{1} << count) - 1);
}

std::vector<std::size_t> VarSet::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

Monomial Monomial::indicator(std::size_t vars, VarSet s) {
  Monomial m(vars);
  for (auto i : s.elements()) {
    if (i >= vars) throw DimensionMismatch("variable index out of range");
    m.exps_[i] = 1;
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t total = 0;
  for (auto e : exps_) total += e;
  return total;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

VarSet Monomial::support() const {
  if (exps_.size() > VarSet::kMaxVars) throw DomainError("support needs at most 64 variables");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) bits |= std::uint64_t{1} << i;
  }
  return VarSet(bits);
}

bool Monomial::divides(const Monomial& other) const {
  require_same_vars(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_vars(*this, other);
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_vars(*this, other);
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_vars(*this, other);
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::scaled(Exponent m) const {
  Monomial out(*this);
  for (auto& e : out.exps_) e = checked_mul(e, m);
  return out;
}

Monomial Monomial::ceil_div(Exponent m) const {
  if (m == 0) throw DomainError("ceil_div by zero");
  Monomial out(*this);
  for (auto& e : out.exps_) e = e / m + (e % m != 0 ? 1 : 0);
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("quotient by a non-divisor");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  return out;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  if (first) return "1";
  return os.str();
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da < db;
  auto ea = a.exponents();
  auto eb = b.exponents();
  // descending lexicographic on the exponent vectors
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Monomial parse_monomial(std::string_view text, std::size_t vars) {
  std::vector<Exponent> exps(vars, 0);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return Monomial(std::move(exps));
  if (text.empty()) throw MalformedInput("empty monomial");

  auto parse_uint = [](std::string_view s, const char* what) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw MalformedInput(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
  };

  while (!text.empty()) {
    auto star = text.find('*');
    auto factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.size() < 2 || factor.front() != 'x') {
      throw MalformedInput("bad monomial factor '" + std::string(factor) + "'");
    }
    factor.remove_prefix(1);
    auto caret = factor.find('^');
    auto index = parse_uint(factor.substr(0, caret), "variable index");
    unsigned long long power = 1;
    if (caret != std::string_view::npos) power = parse_uint(factor.substr(caret + 1), "exponent");
    if (index == 0 || index > vars) {
      throw MalformedInput("variable x" + std::to_string(index) + " outside 1.." + std::to_string(vars));
    }
    if (power > std::numeric_limits<Exponent>::max() - exps[index - 1]) {
      throw ExponentOverflow("exponent overflow while parsing");
    }
    exps[index - 1] += static_cast<Exponent>(power);
  }
  return Monomial(std::move(exps));
}

}  // namespace sfpow

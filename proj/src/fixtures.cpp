#include "sfpow/fixtures.hpp"

#include "sfpow/error.hpp"

namespace sfpow {

namespace {

MonomialIdeal from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Monomial> gens;
  for (auto [a, b] : edges) gens.push_back(Monomial::indicator(n, VarSet{}.with(a).with(b)));
  return MonomialIdeal::normalize(std::move(gens), n);
}

}  // namespace

MonomialIdeal cycle_ideal(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges(n, edges);
}

MonomialIdeal path_ideal(std::size_t n) {
  if (n < 2) throw DomainError("path needs at least 2 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edges(n, edges);
}

MonomialIdeal complete_bipartite_ideal(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw DomainError("complete bipartite graph needs both sides nonempty");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return from_edges(a + b, edges);
}

MonomialIdeal variable_ideal(std::size_t k) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(Monomial::indicator(k, VarSet{}.with(i)));
  return MonomialIdeal::normalize(std::move(gens), k);
}

MonomialIdeal fixture(std::string_view name) {
  if (name == "c3") return cycle_ideal(3);
  if (name == "c4") return cycle_ideal(4);
  if (name == "c5") return cycle_ideal(5);
  if (name == "c7") return cycle_ideal(7);
  if (name == "path3") return path_ideal(3);
  if (name == "path4") return path_ideal(4);
  if (name == "k23") return complete_bipartite_ideal(2, 3);
  if (name == "edge") return path_ideal(2);
  if (name == "prime2") return variable_ideal(2);
  if (name == "prime3") return variable_ideal(3);
  throw MalformedInput("unknown fixture \"" + std::string(name) + "\"");
}

std::vector<std::string> fixture_names() {
  return {"c3", "c4", "c5", "c7", "path3", "path4", "k23", "edge", "prime2", "prime3"};
}

}  // namespace sfpow

#include "sfpow/io.hpp"

#include <fstream>
#include <sstream>

#include "sfpow/error.hpp"

namespace sfpow::io {

namespace {

std::size_t require_count(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw MalformedInput(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const Json& require_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw MalformedInput(std::string("\"") + key + "\" must be an array");
  }
  return j.at(key);
}

}  // namespace

MonomialIdeal ideal_from_json(const Json& j) {
  const auto vars = require_count(j, "vars");
  std::vector<Monomial> gens;
  for (const auto& row : require_array(j, "generators")) {
    if (!row.is_array()) throw MalformedInput("each generator must be an exponent array");
    std::vector<Exponent> exps;
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<unsigned long long>() > 0xffffffffULL) {
        throw MalformedInput("exponents must be non-negative 32-bit integers");
      }
      exps.push_back(e.get<Exponent>());
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::normalize(std::move(gens), vars);
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
  }
  return Json{{"vars", ideal.vars()}, {"generators", std::move(gens)}};
}

Clutter clutter_from_json(const Json& j) {
  const auto n = require_count(j, "vertices");
  if (n > VarSet::kMaxVars) throw MalformedInput("clutters support at most 64 vertices");
  std::vector<VarSet> edges;
  for (const auto& row : require_array(j, "edges")) {
    if (!row.is_array()) throw MalformedInput("each edge must be a vertex array");
    VarSet e;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(n)) {
        throw MalformedInput("edge vertices must be integers in 1.." + std::to_string(n));
      }
      e = e.with(v.get<std::size_t>() - 1);
    }
    edges.push_back(e);
  }
  return Clutter(n, std::move(edges));
}

Json to_json(const Clutter& clutter) {
  Json edges = Json::array();
  for (auto e : clutter.edges()) {
    Json row = Json::array();
    for (auto v : e.elements()) row.push_back(v + 1);
    edges.push_back(std::move(row));
  }
  return Json{{"vertices", clutter.vertices()}, {"edges", std::move(edges)}};
}

Json to_json(const BettiTable& table) {
  Json out = Json::object();
  for (const auto& e : table.entries()) out[std::to_string(e.i) + "," + e.b.to_string()] = e.rank;
  return out;
}

namespace {

Json check_json(const PowerCheck& c) {
  Json j{{"n", c.n}, {"equal", c.equal}};
  j["witness"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
  return j;
}

}  // namespace

Json to_json(const EqualityReport& report) {
  Json per_n = Json::array();
  for (const auto& c : report.per_n) per_n.push_back(check_json(c));
  Json out{{"mu", report.mu}, {"checked_up_to", report.checked_up_to}, {"per_n", std::move(per_n)}};
  out["first_failure"] = report.first_failure ? check_json(*report.first_failure) : Json(nullptr);
  out["verdict_all_n"] = report.verdict_all_n;
  if (!report.extended.empty()) {
    Json ext = Json::array();
    for (const auto& c : report.extended) ext.push_back(check_json(c));
    out["extended"] = std::move(ext);
  }
  return out;
}

MonomialIdeal parse_ideal_text(std::string_view text, std::size_t vars) {
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find_first_of(",\n", start);
    auto piece = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
    bool blank = piece.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) gens.push_back(parse_monomial(piece, vars));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return MonomialIdeal::normalize(std::move(gens), vars);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

std::variant<MonomialIdeal, Clutter> load_ideal_or_clutter(const std::filesystem::path& path) {
  auto j = read_json_file(path);
  if (j.is_object() && j.contains("edges")) return clutter_from_json(j);
  return ideal_from_json(j);
}

MonomialIdeal load_ideal(const std::filesystem::path& path) {
  auto v = load_ideal_or_clutter(path);
  if (auto* c = std::get_if<Clutter>(&v)) return ideal_from_clutter(*c);
  return std::get<MonomialIdeal>(v);
}

Clutter load_clutter(const std::filesystem::path& path) {
  auto v = load_ideal_or_clutter(path);
  if (auto* i = std::get_if<MonomialIdeal>(&v)) return clutter_from_ideal(*i);
  return std::get<Clutter>(v);
}

}  // namespace sfpow::io

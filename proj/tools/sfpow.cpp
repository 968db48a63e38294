// sfpow: command-line front end for the square-free power toolkit.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfpow/clutter.hpp"
#include "sfpow/corpus.hpp"
#include "sfpow/equality.hpp"
#include "sfpow/error.hpp"
#include "sfpow/field.hpp"
#include "sfpow/fixtures.hpp"
#include "sfpow/io.hpp"
#include "sfpow/limits.hpp"
#include "sfpow/splitting.hpp"

namespace {

using namespace sfpow;
using Json = io::Json;

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kRefused = 3, kDefect = 4 };

struct Config {
  std::string fixture;
  std::string input;
  unsigned chars = 0;
  std::optional<std::uint64_t> budget;
  int workers = 0;
  std::string format = "table";
  std::uint64_t seed = 1;
};

struct Defect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MonomialIdeal load_input(const Config& cfg) {
  if (!cfg.fixture.empty() && !cfg.input.empty()) throw MalformedInput("give either --fixture or an input file");
  if (!cfg.fixture.empty()) return fixture(cfg.fixture);
  if (cfg.input.empty()) throw MalformedInput("no input: pass a file or --fixture NAME");
  return io::load_ideal(cfg.input);
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << r[c];
      if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string weights(const WeightVector& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string vertex_set(VarSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s.elements()) {
    out += (first ? "" : ",") + std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

int cmd_symbolic(const Config& cfg, unsigned n) {
  const auto I = load_input(cfg);
  const auto S = symbolic_power(I, n);
  if (cfg.format == "json") {
    Json j{{"n", n}, {"ideal", io::to_json(I)}, {"symbolic_power", io::to_json(S)}};
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "generator";
    for (std::size_t i = 1; i <= S.vars(); ++i) std::cout << ",x" << i;
    std::cout << '\n';
    for (const auto& g : S.generators()) {
      std::cout << g.to_string();
      for (auto e : g.exponents()) std::cout << ',' << e;
      std::cout << '\n';
    }
  } else {
    std::cout << "I      = " << I.to_string() << '\n';
    std::cout << "I^(" << n << ") = " << S.to_string() << '\n';
    std::cout << "generators: " << S.mu() << ", alpha: " << alpha(S) << '\n';
  }
  return kOk;
}

int cmd_equality(const Config& cfg, unsigned extended) {
  const auto I = load_input(cfg);
  const auto report = equal_all_powers(I, extended);
  for (const auto& c : report.extended) {
    if (report.verdict_all_n && !c.equal) {
      throw Defect("all powers up to ceil(mu/2) agree but I^" + std::to_string(c.n) + " != I^(" +
                   std::to_string(c.n) + ")");
    }
  }
  if (cfg.format == "json") {
    std::cout << io::to_json(report).dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  auto add = [&](const PowerCheck& c, const char* range) {
    rows.push_back({std::to_string(c.n), yes_no(c.equal), c.witness ? c.witness->to_string() : "", range});
  };
  for (const auto& c : report.per_n) add(c, "criterion");
  for (const auto& c : report.extended) add(c, "extended");
  if (cfg.format == "csv") {
    std::cout << "n,equal,witness,range\n";
    for (const auto& r : rows) std::cout << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
    return kOk;
  }
  std::cout << "I = " << I.to_string() << "  mu = " << report.mu << "  criterion range n <= "
            << report.checked_up_to << "\n\n";
  print_table(std::cout, {"n", "equal", "witness", "range"}, rows);
  std::cout << "\nverdict: I^n " << (report.verdict_all_n ? "==" : "!=") << " I^(n) "
            << (report.verdict_all_n ? "for every n" : "for some n");
  if (report.first_failure) std::cout << " (first failure at n = " << report.first_failure->n << ")";
  std::cout << '\n';
  return kOk;
}

int cmd_splitting(const Config& cfg, Exponent m, unsigned n_max) {
  const auto I = load_input(cfg);
  std::vector<std::vector<std::string>> rows;
  Json lemma = Json::array();
  for (unsigned n = 0; n <= n_max; ++n) {
    auto r = verify_lemma_stable(I, n, m);
    if (!r.holds) {
      throw Defect("phi_image(I^(" + std::to_string(n) + "*" + std::to_string(m) + "+" +
                   std::to_string(*r.failing_j) + "), m) != I^(" + std::to_string(n + 1) + ")");
    }
    lemma.push_back(Json{{"n", n}, {"holds", true}});
  }
  const auto main = mainsqfree_condition(I, m, n_max);
  Json frob = Json::array();
  for (unsigned n = 0; n <= n_max; ++n) {
    auto f = frobenius_containment(I, n);
    frob.push_back(Json{{"n", n}, {"holds", f.holds}});
    rows.push_back({std::to_string(n), "true", main.failing_n && *main.failing_n <= n ? "false" : "true",
                    yes_no(f.holds)});
  }
  if (cfg.format == "json") {
    Json j{{"m", m}, {"n_max", n_max}, {"identity", lemma}};
    j["containment"] = Json{{"holds", main.holds}};
    j["containment"]["failing_n"] = main.failing_n ? Json(*main.failing_n) : Json(nullptr);
    j["containment"]["witness"] = main.witness ? Json(main.witness->to_string()) : Json(nullptr);
    j["frobenius"] = frob;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (cfg.format == "csv") {
    std::cout << "n,identity,containment_through_n,frobenius\n";
    for (const auto& r : rows) std::cout << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
    return kOk;
  }
  std::cout << "I = " << I.to_string() << "  m = " << m << "\n\n";
  print_table(std::cout, {"n", "identity", "containment_through_n", "frobenius"}, rows);
  if (!main.holds) {
    std::cout << "\ncontainment fails at n = " << *main.failing_n << ", witness " << main.witness->to_string()
              << '\n';
  }
  return kOk;
}

int cmd_packed(const Config& cfg) {
  const auto I = load_input(cfg);
  const auto C = clutter_from_ideal(I);
  const auto cover = cover_number(C);
  const auto match = matching_number(C);
  const auto packed = is_packed(C);
  std::optional<bool> mfmc;
  try {
    MfmcOptions mo;
    if (cfg.budget) mo.budget = *cfg.budget;
    mfmc = mfmc_check(C, mo).mfmc;
  } catch (const BudgetExceeded&) {
  }
  const bool equal = equal_all_powers(I).verdict_all_n;
  if (equal && !packed.packed) throw Defect("all powers equal but the clutter is not packed");

  std::string failing;
  if (!packed.packed) {
    failing = "zeros=" + vertex_set(*packed.failing_zeros) + " ones=" + vertex_set(*packed.failing_ones);
  }
  if (cfg.format == "json") {
    Json j{{"clutter", io::to_json(C)}, {"cover_number", cover}, {"matching_number", match},
           {"konig", cover == match},   {"packed", packed.packed}};
    j["failing_minor"] = packed.packed ? Json(nullptr) : Json(failing);
    j["mfmc"] = mfmc ? Json(*mfmc) : Json(nullptr);
    j["all_powers_equal"] = equal;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (cfg.format == "csv") {
    std::cout << "cover_number,matching_number,konig,packed,mfmc,all_powers_equal\n"
              << cover << ',' << match << ',' << yes_no(cover == match) << ',' << yes_no(packed.packed) << ','
              << (mfmc ? yes_no(*mfmc) : "") << ',' << yes_no(equal) << '\n';
    return kOk;
  }
  std::cout << C.to_string() << "\n";
  std::cout << "cover number     " << cover << "\nmatching number  " << match << "\nkonig            "
            << yes_no(cover == match) << "\npacked           " << yes_no(packed.packed);
  if (!packed.packed) std::cout << "  (first non-Konig minor: " << failing << ")";
  std::cout << "\nmfmc             " << (mfmc ? yes_no(*mfmc) : "over budget") << '\n';
  if (packed.packed && mfmc && !*mfmc) std::cout << "note: packed but not MFMC\n";
  return kOk;
}

int cmd_mfmc(const Config& cfg, const std::string& dump, bool symmetry) {
  const auto I = load_input(cfg);
  const auto C = clutter_from_ideal(I);
  MfmcOptions mo;
  if (cfg.budget) mo.budget = *cfg.budget;
  mo.use_symmetry = symmetry;
  std::uint64_t size = 0;
  try {
    size = mfmc_sweep_size(C, mo.budget);
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\nuse `sfpow equality` for the same verdict via ideal powers\n";
    return kRefused;
  }
  const auto result = mfmc_check(C, mo);
  const auto report = equal_all_powers(I);
  if (result.mfmc != report.verdict_all_n) {
    throw Defect("mfmc sweep says " + yes_no(result.mfmc) + " but the equality criterion says " +
                 yes_no(report.verdict_all_n));
  }
  if (!dump.empty()) {
    std::ofstream out(dump);
    if (!out) throw MalformedInput("cannot write " + dump);
    for (std::size_t i = 1; i <= C.vertices(); ++i) out << 'c' << i << ',';
    out << "gamma,sigma,packs\n";
    for (const auto& row : packing_sweep(C, mo.budget)) {
      for (auto w : row.c) out << w << ',';
      out << row.gamma << ',' << row.sigma << ',' << yes_no(row.gamma == row.sigma) << '\n';
    }
  }
  std::optional<CoverPackingResult> at;
  if (result.failing_c) at = cover_packing(C, *result.failing_c);
  if (cfg.format == "json") {
    Json j{{"clutter", io::to_json(C)}, {"weight_cap", mfmc_weight_cap(C)}, {"sweep_size", size},
           {"vectors_checked", result.vectors_checked}, {"mfmc", result.mfmc}};
    if (at) {
      j["failing_c"] = *result.failing_c;
      j["gamma"] = at->gamma;
      j["sigma"] = at->sigma;
    } else {
      j["failing_c"] = nullptr;
    }
    j["all_powers_equal"] = report.verdict_all_n;
    j["agree"] = true;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (cfg.format == "csv") {
    std::cout << "mfmc,failing_c,gamma,sigma,all_powers_equal\n"
              << yes_no(result.mfmc) << ',' << (at ? "\"" + weights(*result.failing_c) + "\"" : "") << ','
              << (at ? std::to_string(at->gamma) : "") << ',' << (at ? std::to_string(at->sigma) : "") << ','
              << yes_no(report.verdict_all_n) << '\n';
    return kOk;
  }
  std::cout << C.to_string() << "\nsweep {0.." << mfmc_weight_cap(C) << "}^" << C.vertices()
            << ": " << result.vectors_checked << " weight vectors checked\n";
  std::cout << "mfmc: " << yes_no(result.mfmc);
  if (at) std::cout << "  (c = " << weights(*result.failing_c) << ": gamma " << at->gamma << ", sigma " << at->sigma << ")";
  std::cout << "\nequality criterion: " << yes_no(report.verdict_all_n) << " (agrees)\n";
  return kOk;
}

int cmd_limits(const Config& cfg, unsigned n_max) {
  const auto I = load_input(cfg);
  SummaryOptions so;
  if (cfg.budget) so.max_generators = static_cast<std::size_t>(*cfg.budget);
  const auto exp = limit_experiment(I, n_max, cfg.chars, so);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& r : exp.rows) {
      Json j{{"n", r.n}, {"generators", r.generators}};
      if (r.skipped) {
        j["skipped"] = r.skip_reason;
      } else {
        Json a = Json::array();
        for (const auto& v : r.summary.a_invariants) a.push_back(format_a_invariant(v));
        j["reg"] = r.summary.reg;
        j["depth"] = r.summary.depth;
        j["a"] = a;
        j["alpha"] = r.summary.alpha;
        j["reg_over_n"] = exact_ratio(r.summary.reg, r.n);
        j["alpha_over_n"] = exact_ratio(static_cast<long>(r.summary.alpha), r.n);
        j["checks"] = r.checks_ok ? "ok" : "violated";
      }
      rows.push_back(std::move(j));
    }
    Json v = Json::array();
    for (const auto& x : exp.violations) v.push_back(Json{{"n", x.n}, {"m", x.m}, {"kind", x.kind}, {"detail", x.detail}});
    std::cout << Json{{"dim", exp.dim}, {"rows", rows}, {"violations", v}, {"checks_run", exp.checks_run},
                      {"truncated", exp.truncated}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << limit_csv(exp);
  }
  if (!exp.violations.empty()) {
    const auto& x = exp.violations.front();
    throw Defect("inequality " + x.kind + " fails at n=" + std::to_string(x.n) + " m=" + std::to_string(x.m) + ": " +
                 x.detail);
  }
  return kOk;
}

int cmd_corpus(const Config& cfg, CorpusOptions opts) {
  opts.seed = cfg.seed;
  opts.field_char = cfg.chars;
  if (cfg.budget) opts.mfmc_budget = *cfg.budget;
  const auto report = run_corpus(opts);
  if (cfg.format == "json") {
    std::cout << corpus_json(report).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << corpus_csv(report);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report.rows) {
      rows.push_back({r.name, std::to_string(r.mu), r.ideal, yes_no(r.verdict),
                      r.first_failure ? std::to_string(*r.first_failure) : "-", r.mfmc ? yes_no(*r.mfmc) : "-",
                      r.packed ? yes_no(*r.packed) : "-", r.defect() ? "DEFECT" : "ok"});
    }
    print_table(std::cout, {"name", "mu", "ideal", "all_equal", "first_fail", "mfmc", "packed", "checks"}, rows);
    std::cout << '\n' << report.rows.size() << " ideals, " << report.defects << " defects\n";
  }
  if (report.defects != 0) throw Defect(std::to_string(report.defects) + " corpus ideal(s) violate a proved statement");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic and ordinary powers of square-free monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--fixture", cfg.fixture, "Built-in ideal: c3 c4 c5 c7 path3 path4 k23 edge prime2 prime3")
      ->envname("SFPOW_FIXTURE");
  app.add_option("--chars", cfg.chars, "Field characteristic: 0 or a prime")->envname("SFPOW_CHARS");
  app.add_option("--budget", cfg.budget, "mfmc: weight vectors; limits: generators per power")
      ->envname("SFPOW_BUDGET");
  app.add_option("--workers", cfg.workers, "Worker threads (0 = all)")->envname("SFPOW_WORKERS");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->envname("SFPOW_FORMAT");
  app.add_option("--seed", cfg.seed, "Corpus seed")->envname("SFPOW_SEED");

  unsigned n = 2;
  auto* symbolic = app.add_subcommand("symbolic", "Minimal generators of I^(n)");
  symbolic->add_option("input", cfg.input, "Ideal or clutter JSON");
  symbolic->add_option("-n", n, "Order")->check(CLI::PositiveNumber);

  unsigned extended = 0;
  auto* equality = app.add_subcommand("equality", "Decide I^n == I^(n) for every n");
  equality->add_option("input", cfg.input, "Ideal or clutter JSON");
  equality->add_option("--extended", extended, "Also check n up to this value directly");

  Exponent m = 2;
  unsigned split_n = 3;
  auto* splitting = app.add_subcommand("splitting", "Splitting identity and containment criteria");
  splitting->add_option("input", cfg.input, "Ideal or clutter JSON");
  splitting->add_option("-m", m, "Root order")->check(CLI::Range(2u, 64u));
  splitting->add_option("--n-max", split_n, "Largest n");

  auto* packed = app.add_subcommand("packed", "Konig and packed properties");
  packed->add_option("input", cfg.input, "Ideal or clutter JSON");

  std::string dump;
  bool symmetry = false;
  auto* mfmc = app.add_subcommand("mfmc", "Finite max-flow-min-cut sweep");
  mfmc->add_option("input", cfg.input, "Ideal or clutter JSON");
  mfmc->add_option("--dump", dump, "Write gamma/sigma for every weight vector as CSV");
  mfmc->add_flag("--symmetry", symmetry, "Skip weight vectors equivalent under automorphisms");

  unsigned n_max = 3;
  auto* limits = app.add_subcommand("limits", "Invariants of R/I^(n) for n <= n-max");
  limits->add_option("input", cfg.input, "Ideal or clutter JSON");
  limits->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);

  CorpusOptions copts;
  bool no_plant = false;
  bool no_homology = false;
  auto* corpus = app.add_subcommand("corpus", "Cross-check random square-free ideals");
  corpus->add_option("--vars", copts.vars, "Variables")->check(CLI::Range(1, 64));
  corpus->add_option("--max-gens", copts.max_gens, "Generators drawn per ideal")->check(CLI::PositiveNumber);
  corpus->add_option("--count", copts.count, "Random ideals");
  corpus->add_flag("--no-plant", no_plant, "Omit the built-in fixtures");
  corpus->add_flag("--no-homology", no_homology, "Skip the homology checks");

  CLI11_PARSE(app, argc, argv);
  if (cfg.workers > 0) omp_set_num_threads(cfg.workers);

  try {
    require_field_characteristic(cfg.chars);
    if (cfg.budget && *cfg.budget == 0) throw MalformedInput("--budget must be positive");
    if (symbolic->parsed()) return cmd_symbolic(cfg, n);
    if (equality->parsed()) return cmd_equality(cfg, extended);
    if (splitting->parsed()) return cmd_splitting(cfg, m, split_n);
    if (packed->parsed()) return cmd_packed(cfg);
    if (mfmc->parsed()) return cmd_mfmc(cfg, dump, symmetry);
    if (limits->parsed()) return cmd_limits(cfg, n_max);
    if (corpus->parsed()) {
      copts.plant = !no_plant;
      copts.homology = !no_homology;
      return cmd_corpus(cfg, copts);
    }
  } catch (const Defect& e) {
    std::cout.flush();
    std::cerr << "*** DEFECT: " << e.what() << "\n*** a proved statement failed; this is a bug in sfpow\n";
    return kDefect;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

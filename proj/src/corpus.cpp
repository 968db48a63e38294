#include "sfpow/corpus.hpp"

#include <atomic>
#include <exception>
#include <random>
#include <sstream>

#include "sfpow/equality.hpp"
#include "sfpow/error.hpp"
#include "sfpow/fixtures.hpp"
#include "sfpow/splitting.hpp"

namespace sfpow {

namespace {

// Manual modulo keeps the stream identical across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

struct TranslationTables {
  Clutter clutter;
  std::vector<MonomialIdeal> symbolic;
  std::vector<MonomialIdeal> ordinary;
  std::uint32_t base = 0;
  std::uint64_t total = 1;
};

TranslationTables translation_tables(const MonomialIdeal& ideal, std::uint32_t c_max, unsigned t_max) {
  require_theorem_domain(ideal, "translation_check");
  if (t_max == 0) throw DomainError("translation_check needs t_max >= 1");
  TranslationTables tab;
  tab.clutter = clutter_from_ideal(ideal);
  for (unsigned t = 1; t <= t_max; ++t) {
    tab.symbolic.push_back(symbolic_power(ideal, t));
    tab.ordinary.push_back(power(ideal, t));
  }
  tab.base = c_max + 1;
  for (std::size_t i = 0; i < ideal.vars(); ++i) {
    if (tab.total > 100'000'000 / tab.base) throw BudgetExceeded("translation_check: weight box too large");
    tab.total *= tab.base;
  }
  return tab;
}

WeightVector decode(std::uint64_t idx, std::size_t n, std::uint32_t base) {
  WeightVector c(n);
  for (std::size_t i = n; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(idx % base);
    idx /= base;
  }
  return c;
}

// Smallest violating t at c, or 0.
unsigned first_bad_t(const TranslationTables& tab, const WeightVector& c) {
  const auto g = gamma(tab.clutter, c).value;
  const auto s = sigma(tab.clutter, c).value;
  const Monomial x(std::vector<Exponent>(c.begin(), c.end()));
  for (unsigned t = 1; t <= tab.symbolic.size(); ++t) {
    if (contains_monomial(tab.symbolic[t - 1], x) != (t <= g)) return t;
    if (contains_monomial(tab.ordinary[t - 1], x) != (t <= s)) return t;
  }
  return 0;
}

TranslationResult finish(const TranslationTables& tab, std::uint64_t violations, std::uint64_t first,
                         std::size_t n) {
  TranslationResult out;
  out.vectors = tab.total;
  out.violations = violations;
  if (violations != 0) {
    out.failing_c = decode(first, n, tab.base);
    out.failing_t = first_bad_t(tab, *out.failing_c);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusOptions& options) {
  if (options.vars == 0 || options.vars > VarSet::kMaxVars) throw DomainError("corpus vars must be in 1..64");
  if (options.max_gens == 0) throw DomainError("corpus max_gens must be >= 1");
  std::vector<CorpusEntry> out;
  if (options.plant) {
    for (const char* name : {"c3", "c4", "c5", "path3", "k23"}) out.push_back({name, fixture(name)});
  }
  std::mt19937_64 rng(options.seed);
  const std::uint64_t subsets = options.vars == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << options.vars) - 1;
  for (std::size_t k = 0; k < options.count; ++k) {
    const auto gens = 1 + draw(rng, options.max_gens);
    std::vector<Monomial> mons;
    for (std::uint64_t g = 0; g < gens; ++g) {
      mons.push_back(Monomial::indicator(options.vars, VarSet(1 + draw(rng, subsets))));
    }
    out.push_back({"r" + std::to_string(k + 1), MonomialIdeal::normalize(std::move(mons), options.vars)});
  }
  return out;
}

TranslationResult translation_check(const MonomialIdeal& ideal, std::uint32_t c_max, unsigned t_max) {
  const auto tab = translation_tables(ideal, c_max, t_max);
  const std::size_t n = ideal.vars();
  std::atomic<std::uint64_t> first{tab.total};
  std::uint64_t violations = 0;
  const auto total = static_cast<std::int64_t>(tab.total);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : violations)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (first_bad_t(tab, decode(static_cast<std::uint64_t>(idx), n, tab.base)) == 0) continue;
    ++violations;
    auto seen = first.load();
    while (static_cast<std::uint64_t>(idx) < seen && !first.compare_exchange_weak(seen, idx)) {
    }
  }
  return finish(tab, violations, first.load(), n);
}

TranslationResult translation_check_serial(const MonomialIdeal& ideal, std::uint32_t c_max, unsigned t_max) {
  const auto tab = translation_tables(ideal, c_max, t_max);
  const std::size_t n = ideal.vars();
  std::uint64_t violations = 0;
  std::uint64_t first = tab.total;
  for (std::uint64_t idx = 0; idx < tab.total; ++idx) {
    if (first_bad_t(tab, decode(idx, n, tab.base)) == 0) continue;
    if (violations++ == 0) first = idx;
  }
  return finish(tab, violations, first, n);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::ok:
      return "ok";
    case Outcome::fail:
      return "FAIL";
    case Outcome::skipped:
      return "skip";
  }
  return "?";
}

bool CorpusRow::defect() const {
  for (auto o : {extrapolation, equivalence, lemma_stable, translation, mfmc_agrees, packed_direction, homology}) {
    if (o == Outcome::fail) return true;
  }
  return false;
}

CorpusRow check_corpus_entry(const CorpusEntry& entry, const CorpusOptions& options) {
  const auto& I = entry.ideal;
  CorpusRow row;
  row.name = entry.name;
  row.ideal = I.to_string();
  row.vars = I.vars();
  row.mu = I.mu();

  const auto report = equal_all_powers(I);
  row.verdict = report.verdict_all_n;
  if (report.first_failure) row.first_failure = report.first_failure->n;

  if (row.verdict) {
    for (unsigned n = report.checked_up_to + 1; n <= row.mu + 2; ++n) {
      auto check = powers_equal(I, n);
      if (!check.equal) {
        row.extrapolation = Outcome::fail;
        row.notes.push_back("I^" + std::to_string(n) + " != I^(" + std::to_string(n) + ") witness " +
                            check.witness->to_string());
        break;
      }
    }
  }

  const unsigned N = equality_bound(I) + 2;
  row.equivalence_bound = N;
  const auto main = mainsqfree_condition(I, 2, N);
  row.mainsqfree = main.holds;
  row.frobenius = true;
  for (unsigned n = 0; n <= N && row.frobenius; ++n) row.frobenius = frobenius_containment(I, n).holds;
  row.direct = true;
  for (unsigned n = 1; n <= N && row.direct; ++n) row.direct = powers_equal(I, n).equal;
  if (row.mainsqfree != row.frobenius || row.frobenius != row.direct) {
    row.equivalence = Outcome::fail;
    row.notes.push_back("containment criteria disagree");
  }

  for (unsigned n = 0; n <= 3 && row.lemma_stable == Outcome::ok; ++n) {
    for (Exponent m = 1; m <= 3; ++m) {
      auto r = verify_lemma_stable(I, n, m);
      if (!r.holds) {
        row.lemma_stable = Outcome::fail;
        row.notes.push_back("splitting identity fails at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                            " j=" + std::to_string(*r.failing_j));
        break;
      }
    }
  }

  if (row.vars <= 5 && row.mu <= 6) {
    auto t = translation_check_serial(I);
    row.translation_vectors = t.vectors;
    if (t.violations != 0) {
      row.translation = Outcome::fail;
      std::ostringstream os;
      os << "translation fails at t=" << t.failing_t << " c=(";
      for (std::size_t i = 0; i < t.failing_c->size(); ++i) os << (i ? "," : "") << (*t.failing_c)[i];
      os << ')';
      row.notes.push_back(os.str());
    }
  } else {
    row.translation = Outcome::skipped;
  }

  const auto clutter = clutter_from_ideal(I);
  try {
    MfmcOptions mo;
    mo.budget = options.mfmc_budget;
    row.mfmc = mfmc_check_serial(clutter, mo).mfmc;
    row.mfmc_agrees = *row.mfmc == row.verdict ? Outcome::ok : Outcome::fail;
  } catch (const BudgetExceeded&) {
    row.notes.push_back("mfmc sweep over budget");
  }
  try {
    row.packed = is_packed(clutter).packed;
    row.packed_direction = (!row.verdict || *row.packed) ? Outcome::ok : Outcome::fail;
    if (row.packed_direction == Outcome::fail) row.notes.push_back("all powers equal but clutter not packed");
  } catch (const BudgetExceeded&) {
    row.notes.push_back("packed check over budget");
  }

  if (options.homology) {
    row.homology = Outcome::ok;
    for (unsigned n = 1; n <= options.homology_n; ++n) {
      const auto J = symbolic_power(I, n);
      try {
        const auto s = summary(J, options.field_char, options.summary);
        ++row.homology_checked;
        if (!s.consistent()) {
          row.homology = Outcome::fail;
          row.notes.push_back("homology paths disagree on I^(" + std::to_string(n) + ")");
        }
        if (options.field_char == 0 && row.vars <= 5 && !(betti_numbers(J, 2) == s.betti)) {
          ++row.char_disagreements;
          row.notes.push_back("Betti numbers over Q and F_2 differ on I^(" + std::to_string(n) + ")");
        }
      } catch (const BudgetExceeded&) {
        ++row.homology_skipped;
      }
    }
    if (row.homology_checked == 0) row.homology = Outcome::skipped;
  }
  return row;
}

CorpusReport run_corpus(const CorpusOptions& options) {
  const auto entries = generate_corpus(options);
  CorpusReport report;
  report.options = options;
  report.rows.resize(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  const auto count = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      report.rows[k] = check_corpus_entry(entries[k], options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& row : report.rows) report.defects += row.defect() ? 1 : 0;
  return report;
}

nlohmann::ordered_json corpus_json(const CorpusReport& report) {
  using Json = nlohmann::ordered_json;
  const auto& o = report.options;
  Json out;
  out["options"] = Json{{"vars", o.vars},         {"max_gens", o.max_gens},     {"count", o.count},
                        {"seed", o.seed},         {"plant", o.plant},           {"homology", o.homology},
                        {"field_char", o.field_char}, {"mfmc_budget", o.mfmc_budget}};
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json j{{"name", r.name}, {"ideal", r.ideal}, {"vars", r.vars}, {"mu", r.mu}, {"verdict_all_n", r.verdict}};
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    j["extrapolation"] = to_string(r.extrapolation);
    j["equivalence"] = Json{{"bound", r.equivalence_bound},
                            {"mainsqfree", r.mainsqfree},
                            {"frobenius", r.frobenius},
                            {"direct", r.direct},
                            {"outcome", to_string(r.equivalence)}};
    j["splitting_identity"] = to_string(r.lemma_stable);
    j["translation"] = Json{{"vectors", r.translation_vectors}, {"outcome", to_string(r.translation)}};
    j["mfmc"] = r.mfmc ? Json(*r.mfmc) : Json(nullptr);
    j["mfmc_agrees"] = to_string(r.mfmc_agrees);
    j["packed"] = r.packed ? Json(*r.packed) : Json(nullptr);
    j["packed_direction"] = to_string(r.packed_direction);
    j["homology"] = Json{{"checked", r.homology_checked},
                         {"skipped", r.homology_skipped},
                         {"char_disagreements", r.char_disagreements},
                         {"outcome", to_string(r.homology)}};
    j["defect"] = r.defect();
    j["notes"] = r.notes;
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  out["defects"] = report.defects;
  return out;
}

std::string corpus_csv(const CorpusReport& report) {
  std::ostringstream os;
  os << "name,vars,mu,ideal,verdict_all_n,first_failure,extrapolation,equivalence,splitting_identity,"
        "translation,mfmc,mfmc_agrees,packed,packed_direction,homology,defect\n";
  auto opt_bool = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
  for (const auto& r : report.rows) {
    os << r.name << ',' << r.vars << ',' << r.mu << ',' << csv_quote(r.ideal) << ','
       << (r.verdict ? "true" : "false") << ',' << (r.first_failure ? std::to_string(*r.first_failure) : "")
       << ',' << to_string(r.extrapolation) << ',' << to_string(r.equivalence) << ','
       << to_string(r.lemma_stable) << ',' << to_string(r.translation) << ',' << opt_bool(r.mfmc) << ','
       << to_string(r.mfmc_agrees) << ',' << opt_bool(r.packed) << ',' << to_string(r.packed_direction) << ','
       << to_string(r.homology) << ',' << (r.defect() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace sfpow

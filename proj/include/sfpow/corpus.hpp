#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sfpow/clutter.hpp"
#include "sfpow/ideal.hpp"
#include "sfpow/summary.hpp"

namespace sfpow {

struct CorpusOptions {
  std::size_t vars = 4;
  std::size_t max_gens = 4;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  /// Prepend the fixtures c3, c4, c5, path3 and k23.
  bool plant = true;
  /// Two-path homology checks on I^(n), n <= homology_n.
  bool homology = true;
  unsigned homology_n = 3;
  unsigned field_char = 0;
  std::uint64_t mfmc_budget = 100'000'000;
  SummaryOptions summary;
};

struct CorpusEntry {
  std::string name;
  MonomialIdeal ideal;
};

/// Random square-free ideals from a seeded mt19937_64. Each ideal draws
/// 1..max_gens nonempty supports in `vars` variables and is normalized.
std::vector<CorpusEntry> generate_corpus(const CorpusOptions& options);

/// Lemma-5.1 style comparison of LP optima with ideal membership.
struct TranslationResult {
  std::uint64_t vectors = 0;
  std::uint64_t violations = 0;
  /// First violating c in lexicographic order and the smallest t there.
  std::optional<WeightVector> failing_c;
  unsigned failing_t = 0;
};

/// For every c in {0..c_max}^n and 1 <= t <= t_max:
///   x^c in I^(t) iff t <= gamma(c)  and  x^c in I^t iff t <= sigma(c).
TranslationResult translation_check(const MonomialIdeal& ideal, std::uint32_t c_max = 4, unsigned t_max = 5);
TranslationResult translation_check_serial(const MonomialIdeal& ideal, std::uint32_t c_max = 4,
                                           unsigned t_max = 5);

enum class Outcome { ok, fail, skipped };

std::string to_string(Outcome o);

struct CorpusRow {
  std::string name;
  std::string ideal;
  std::size_t vars = 0;
  std::size_t mu = 0;

  bool verdict = false;
  std::optional<unsigned> first_failure;

  /// verdict implies I^n == I^(n) for n <= mu + 2.
  Outcome extrapolation = Outcome::ok;
  /// mainsqfree, frobenius and direct equality agree for n <= ceil(mu/2)+2.
  unsigned equivalence_bound = 0;
  bool mainsqfree = false;
  bool frobenius = false;
  bool direct = false;
  Outcome equivalence = Outcome::ok;
  Outcome lemma_stable = Outcome::ok;
  Outcome translation = Outcome::ok;
  std::uint64_t translation_vectors = 0;
  std::optional<bool> mfmc;
  Outcome mfmc_agrees = Outcome::skipped;
  std::optional<bool> packed;
  /// verdict implies packed.
  Outcome packed_direction = Outcome::skipped;
  Outcome homology = Outcome::skipped;
  std::size_t homology_checked = 0;
  std::size_t homology_skipped = 0;
  /// Informational: Betti tables over Q and F_2 that differ.
  std::size_t char_disagreements = 0;
  std::vector<std::string> notes;

  bool defect() const;
};

struct CorpusReport {
  CorpusOptions options;
  std::vector<CorpusRow> rows;
  std::size_t defects = 0;
};

CorpusRow check_corpus_entry(const CorpusEntry& entry, const CorpusOptions& options);
CorpusReport run_corpus(const CorpusOptions& options);

nlohmann::ordered_json corpus_json(const CorpusReport& report);
std::string corpus_csv(const CorpusReport& report);

}  // namespace sfpow

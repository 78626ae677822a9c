#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdg/catalog.hpp"
#include "cdg/character_table.hpp"
#include "cdg/codegree.hpp"
#include "cdg/structure.hpp"

namespace cdg {

/// Everything the theorem suites ask about one group, computed in one pass:
/// classes, exact table, codegrees, both graphs, structural predicates and
/// Frobenius-type witnesses.
struct GroupAnalysis {
  std::string name;
  FiniteGroup group;
  ConjugacyData cc;
  CharacterTable table;
  std::vector<CodegreeRecord> records;
  CodegreeGraph gamma;
  PrimeCodegreeGraph delta;
  GraphAnalytics gamma_stats;
  GraphAnalytics delta_stats;
  StructuralPredicates predicates;
  std::optional<FrobeniusWitness> frobenius;
  std::optional<TwoFrobeniusWitness> two_frobenius;
};

GroupAnalysis analyze_group(std::string name, FiniteGroup g);

struct CheckResult {
  std::string check;
  std::string group;
  enum class Verdict { pass, fail, skipped } verdict = Verdict::pass;
  nlohmann::ordered_json witness;  // non-empty whenever the verdict is fail
  long long millis = 0;

  bool failed() const { return verdict == Verdict::fail; }
};

/// The verification corpus: the exhaustive order <= 15 catalog plus the
/// extended constructive corpus up to max_order.
std::vector<CatalogEntry> verify_corpus(std::uint32_t max_order);

std::vector<CheckResult> suite_theorem_prime_powers(const std::vector<CatalogEntry>& corpus);
std::vector<CheckResult> suite_theorem_connectivity(const std::vector<CatalogEntry>& corpus);
std::vector<CheckResult> suite_theorem_triangle_free(const std::vector<CatalogEntry>& corpus);
std::vector<CheckResult> suite_lemmas(const std::vector<CatalogEntry>& corpus,
                                      std::uint32_t cyclic_limit = 500);

/// Solutions (n, y) of 4 + 3y^2 = 4^n with positive y and 2 <= n <= max_n.
std::vector<std::pair<int, long long>> check_step7_diophantine(int max_n);

struct VerifyOptions {
  std::uint32_t max_order = 60;     // corpus bound for the theorem suites
  std::uint32_t cyclic_limit = 500; // cyclic-group codegree count check
  int diophantine_max_n = 20;
  bool timing = false;              // include wall times in the JSON report
};

struct VerifyReport {
  std::vector<std::string> suites;
  VerifyOptions options;
  std::uint32_t corpus_size = 0;
  std::vector<CheckResult> results;  // sorted by (suite, group, check)

  bool all_passed() const {
    for (const auto& r : results)
      if (r.failed()) return false;
    return true;
  }
};

inline const std::vector<std::string> kAllSuites = {
    "prime-powers", "connectivity", "triangle-free", "lemmas", "diophantine"};

/// Runs the named suites over a shared per-group pipeline. Suite ids are
/// those in kAllSuites; "all" expands to every suite.
VerifyReport run_verify(const std::vector<std::string>& suite_ids, const VerifyOptions& options);

/// JSON-lines serialization: one header line, then one line per result.
/// Deterministic byte-for-byte unless timing was requested.
std::string report_to_jsonl(const VerifyReport& report);

/// Human-readable table for standard output.
std::string report_summary(const VerifyReport& report);

}  // namespace cdg

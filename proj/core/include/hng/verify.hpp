#ifndef HNG_VERIFY_HPP
#define HNG_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hng/enumeration.hpp"
#include "hng/miner.hpp"
#include "hng/structure.hpp"

namespace hng {

struct SuiteOptions {
  int n_max = 8;
  int a_max = 2;
  std::uint64_t seed = 1;
  /// Random graphs for sampled phases; 0 skips them.
  int samples = 10000;
  int sample_order_min = 9;
  int sample_order_max = 12;
  int family_order_max = 12;
  int lemma_family_order_max = 10;
  int max_edges = 8;
  /// Catalogs are read from (and written to) here when set.
  CatalogCache* cache = nullptr;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Counterexample {
  std::string graph6;  // empty when the failure is not about one graph
  std::vector<ClauseValue> clauses;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::int64_t> bounds;
  std::vector<Check> checks;
  /// Capped at kMaxStoredCounterexamples; stats["counterexamples"] has the total.
  std::vector<Counterexample> counterexamples;
  std::map<std::string, std::int64_t> stats;
  /// Obstruction-set name -> hash of the set used.
  std::map<std::string, std::string> provenance;
  /// Wall-clock seconds per phase.
  std::vector<std::pair<std::string, double>> timing;

  bool passed() const { return counterexamples.empty(); }
};

inline constexpr std::size_t kMaxStoredCounterexamples = 50;

/// Shares catalogs, derived obstruction sets and brute-force defects across suites.
class VerificationContext {
 public:
  explicit VerificationContext(SuiteOptions options = {});
  ~VerificationContext();
  VerificationContext(const VerificationContext&) = delete;
  VerificationContext& operator=(const VerificationContext&) = delete;

  const SuiteOptions& options() const noexcept { return options_; }

  /// Catalog of order n (1..9).
  const GraphCatalog& catalog(int n);
  /// Hereditary defects aligned with catalog(n).codes.
  const std::vector<std::uint8_t>& hereditary_defects(int n);

  const ObstructionSet& f();
  const ObstructionSet& claw_set();
  const ObstructionSet& triangle_set();
  const ObstructionSet& line_set();

 private:
  SuiteOptions options_;
  std::map<int, GraphCatalog> catalogs_;
  std::map<int, std::vector<std::uint8_t>> defects_;
  std::unique_ptr<ObstructionSet> f_, claw_, triangle_, line_;
};

const std::vector<std::string>& suite_ids();

/// Throws usage for an unknown id and missing_dependency when a required
/// catalog cannot be produced.
VerificationReport run_suite(std::string_view id, VerificationContext& context);
VerificationReport run_suite(std::string_view id, const SuiteOptions& options);

enum class ReportFormat { json, text };

/// JSON output has sorted keys and omits timing unless asked, so identical
/// runs give identical bytes.
void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out,
                 bool include_timing = false);
std::string report_json(const VerificationReport& report, bool include_timing = false);

/// One row of the C_5 type-compatibility listing: every w type allowed next
/// to a vertex of type v, with or without the edge vw.
struct CompatibilityRow {
  C5Type v = 0;
  bool adjacent = false;
  std::vector<C5Type> allowed;  // before closing under the symmetries fixing v
};

const std::vector<CompatibilityRow>& compatibility_listing();

}  // namespace hng

#endif  // HNG_VERIFY_HPP

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dckpell/identities.hpp"

namespace dckpell {

struct CheckResult {
  bool equal;
  DCRational lhs;
  DCRational rhs;
};

/// Evaluates both sides and compares them coefficient-wise.
CheckResult check_one(IdentityId id, const Bindings& bindings);

/// Inclusive integer interval.
struct IndexRange {
  long first;
  long last;

  bool operator==(const IndexRange&) const = default;
};

struct SweepConfig {
  std::vector<IdentityId> ids;
  std::vector<ExactRational> k_values;
  IndexRange n_range{0, 32};
  IndexRange m_range{0, 32};
  IndexRange r_range{1, 8};
  std::size_t max_counterexamples = 5;
  /// Worker threads; 0 picks the hardware concurrency. Output never depends on it.
  unsigned threads = 0;
};

/// k in {1, 2, 3, 4}, n, m in 0..32, r in 1..8, every catalog entry.
SweepConfig default_sweep_config();

enum class Verdict { kHolds, kHoldsOnlyAtKOne, kFails };

std::string_view verdict_name(Verdict v);  // "holds", "holds_only_k1", "fails"

struct Counterexample {
  Bindings bindings;
  std::optional<DCRational> lhs;  // empty when evaluation raised an error
  std::optional<DCRational> rhs;
  std::string error;
};

struct IdentityReport {
  IdentityId id;
  std::size_t grid_size = 0;  // evaluated tuples
  std::size_t skipped = 0;    // tuples outside the identity's index range
  std::size_t failures = 0;
  Verdict verdict = Verdict::kHolds;
  std::vector<Counterexample> counterexamples;  // lexicographically first failures
  std::chrono::nanoseconds elapsed{0};
};

/// Enumerates (id, k, n, m, r) lexicographically over each identity's own
/// parameters (k ascending), so reports are schedule-independent. Per-tuple
/// evaluation errors count as failures with an error note.
std::vector<IdentityReport> sweep(const SweepConfig& config);

/// Verdict of the default sweep restricted to one identity.
Verdict adjudicate(IdentityId id);

nlohmann::ordered_json report_to_json(const IdentityReport& report, bool include_timing = true);
nlohmann::ordered_json reports_to_json(const std::vector<IdentityReport>& reports, bool include_timing = true);

/// "<id> <verdict> <grid_size> <skipped>"
std::string summary_line(const IdentityReport& report);
/// Header plus one row per report: identity,verdict,grid_size,skipped
std::string summary_csv(const std::vector<IdentityReport>& reports);

}  // namespace dckpell

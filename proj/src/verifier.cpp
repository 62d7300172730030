#include "dckpell/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "dckpell/dual_complex_io.hpp"
#include "dckpell/errors.hpp"

namespace dckpell {
namespace {

std::vector<long> values_of(const IndexRange& range) {
  std::vector<long> out;
  for (long v = range.first; v <= range.last; ++v) out.push_back(v);
  return out;
}

// Index window covering every tuple of the config; the window bounds are
// monotone in n, m and r, so the corners suffice.
IndexWindow sweep_window(const SweepConfig& config) {
  IndexWindow window{0, 0};
  bool first = true;
  for (long n : {config.n_range.first, config.n_range.last}) {
    for (long m : {config.m_range.first, config.m_range.last}) {
      for (long r : {config.r_range.first, config.r_range.last}) {
        const IndexWindow w = required_window(Bindings{ExactRational(1), n, m, r});
        window.lo = first ? w.lo : std::min(window.lo, w.lo);
        window.hi = first ? w.hi : std::max(window.hi, w.hi);
        first = false;
      }
    }
  }
  return window;
}

IdentityReport run_identity(IdentityId id, const SweepConfig& config, const std::vector<ExactRational>& ks,
                            const std::map<std::size_t, KPellTable>& tables) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned params = identity_info(id).params;
  const std::vector<std::optional<long>> unbound = {std::nullopt};
  auto axis = [&](unsigned bit, const IndexRange& range) {
    std::vector<std::optional<long>> out;
    if ((params & bit) == 0) return unbound;
    for (long v : values_of(range)) out.emplace_back(v);
    return out;
  };
  const auto ns = axis(kParamN, config.n_range);
  const auto ms = axis(kParamM, config.m_range);
  const auto rs = axis(kParamR, config.r_range);

  IdentityReport report;
  report.id = id;
  bool k_one_failed = false;
  bool k_one_seen = false;
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    const ExactRational& k = ks[ki];
    const bool is_k_one = k == ExactRational(1);
    const auto table_it = tables.find(ki);
    for (const auto& n : ns) {
      for (const auto& m : ms) {
        for (const auto& r : rs) {
          const Bindings b{k, n, m, r};
          try {
            check_range(id, b);
          } catch (const RangeError&) {
            ++report.skipped;
            continue;
          }
          ++report.grid_size;
          k_one_seen = k_one_seen || is_k_one;
          Counterexample cex{b, std::nullopt, std::nullopt, {}};
          bool ok = false;
          try {
            const IdentitySides sides = table_it != tables.end() ? identity_sides(id, b, table_it->second)
                                                                 : identity_sides(id, b);
            ok = sides.lhs == sides.rhs;
            cex.lhs = sides.lhs;
            cex.rhs = sides.rhs;
          } catch (const std::exception& e) {
            cex.lhs.reset();
            cex.rhs.reset();
            cex.error = e.what();
          }
          if (ok) continue;
          ++report.failures;
          k_one_failed = k_one_failed || is_k_one;
          if (report.counterexamples.size() < config.max_counterexamples) {
            report.counterexamples.push_back(std::move(cex));
          }
        }
      }
    }
  }
  if (report.failures == 0) {
    report.verdict = Verdict::kHolds;
  } else if (k_one_seen && !k_one_failed) {
    report.verdict = Verdict::kHoldsOnlyAtKOne;
  } else {
    report.verdict = Verdict::kFails;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

nlohmann::ordered_json optional_index(const std::optional<long>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

CheckResult check_one(IdentityId id, const Bindings& bindings) {
  IdentitySides sides = identity_sides(id, bindings);
  const bool equal = sides.lhs == sides.rhs;
  return {equal, std::move(sides.lhs), std::move(sides.rhs)};
}

SweepConfig default_sweep_config() {
  SweepConfig config;
  for (const auto& info : identity_catalog()) config.ids.push_back(info.id);
  config.k_values = {ExactRational(1), ExactRational(2), ExactRational(3), ExactRational(4)};
  return config;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kHoldsOnlyAtKOne: return "holds_only_k1";
    case Verdict::kFails: return "fails";
  }
  return "?";
}

std::vector<IdentityReport> sweep(const SweepConfig& config) {
  // Catalog order, duplicates removed.
  std::vector<IdentityId> ids;
  for (const auto& info : identity_catalog()) {
    if (std::find(config.ids.begin(), config.ids.end(), info.id) != config.ids.end()) ids.push_back(info.id);
  }
  std::set<ExactRational> k_set(config.k_values.begin(), config.k_values.end());
  const std::vector<ExactRational> ks(k_set.begin(), k_set.end());

  // Shared read-only tables, one per valid k; invalid k values fall through
  // to the per-tuple path and are recorded as failures there.
  std::map<std::size_t, KPellTable> tables;
  if (!ids.empty() && config.n_range.first <= config.n_range.last) {
    const IndexWindow window = sweep_window(config);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      if (ks[ki].sign() > 0) tables.emplace(ki, KPellTable(ks[ki], window.lo, window.hi));
    }
  }

  std::vector<IdentityReport> reports(ids.size());
  unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(ids.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next++; idx < ids.size(); idx = next++) {
      reports[idx] = run_identity(ids[idx], config, ks, tables);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return reports;
}

Verdict adjudicate(IdentityId id) {
  SweepConfig config = default_sweep_config();
  config.ids = {id};
  return sweep(config).front().verdict;
}

nlohmann::ordered_json report_to_json(const IdentityReport& report, bool include_timing) {
  nlohmann::ordered_json out;
  out["identity"] = identity_tag(report.id);
  out["grid_size"] = report.grid_size;
  out["skipped"] = report.skipped;
  out["verdict"] = verdict_name(report.verdict);
  out["failures"] = report.failures;
  auto cexs = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    nlohmann::ordered_json entry;
    entry["k"] = c.bindings.k ? c.bindings.k->to_string() : std::string();
    entry["n"] = optional_index(c.bindings.n);
    entry["m"] = optional_index(c.bindings.m);
    entry["r"] = optional_index(c.bindings.r);
    entry["lhs"] = c.lhs ? to_json(*c.lhs) : nlohmann::ordered_json(nullptr);
    entry["rhs"] = c.rhs ? to_json(*c.rhs) : nlohmann::ordered_json(nullptr);
    if (!c.error.empty()) entry["error"] = c.error;
    cexs.push_back(std::move(entry));
  }
  out["counterexamples"] = std::move(cexs);
  out["elapsed_ms"] = include_timing ? std::chrono::duration<double, std::milli>(report.elapsed).count() : 0.0;
  return out;
}

nlohmann::ordered_json reports_to_json(const std::vector<IdentityReport>& reports, bool include_timing) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r, include_timing));
  return out;
}

std::string summary_line(const IdentityReport& report) {
  std::ostringstream os;
  os << identity_tag(report.id) << ' ' << verdict_name(report.verdict) << ' ' << report.grid_size << ' '
     << report.skipped;
  return os.str();
}

std::string summary_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << "identity,verdict,grid_size,skipped\n";
  for (const auto& r : reports) {
    os << identity_tag(r.id) << ',' << verdict_name(r.verdict) << ',' << r.grid_size << ',' << r.skipped << '\n';
  }
  return os.str();
}

}  // namespace dckpell

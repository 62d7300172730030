#include <algorithm>
#include <fstream>
#include <sstream>

#include "dckpell/verifier.hpp"
#include "gtest/gtest.h"

#ifndef DCKPELL_GOLDEN_SWEEP
#error "DCKPELL_GOLDEN_SWEEP must name the golden default-sweep report"
#endif

namespace dckpell {
namespace {

using R = ExactRational;

SweepConfig small_config(std::vector<IdentityId> ids) {
  SweepConfig config;
  config.ids = std::move(ids);
  config.k_values = {R(1), R(2)};
  config.n_range = {0, 6};
  config.m_range = {0, 4};
  config.r_range = {1, 3};
  config.threads = 1;
  return config;
}

const IdentityReport& find(const std::vector<IdentityReport>& reports, IdentityId id) {
  for (const auto& report : reports) {
    if (report.id == id) return report;
  }
  throw std::runtime_error("no report");
}

TEST(CheckOne, Examples) {
  EXPECT_TRUE(check_one(IdentityId::kG9, Bindings{R(1), 1, std::nullopt, std::nullopt}).equal);
  EXPECT_FALSE(check_one(IdentityId::kF31, Bindings{R(2), 0, std::nullopt, std::nullopt}).equal);
}

TEST(Sweep, EmptyIds) {
  SweepConfig config = small_config({});
  EXPECT_TRUE(sweep(config).empty());
}

TEST(Sweep, SingleTuple) {
  SweepConfig config = small_config({IdentityId::kF13});
  config.k_values = {R(3)};
  config.n_range = {7, 7};
  const auto reports = sweep(config);
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].grid_size, 1U);
  EXPECT_EQ(reports[0].skipped, 0U);
  EXPECT_EQ(reports[0].verdict, Verdict::kHolds);
}

TEST(Sweep, GridSizesAndSkips) {
  const auto reports = sweep(small_config({IdentityId::kF13, IdentityId::kG13, IdentityId::kG18, IdentityId::kG19Proof}));
  EXPECT_EQ(find(reports, IdentityId::kF13).grid_size, 14U);
  EXPECT_EQ(find(reports, IdentityId::kG13).grid_size, 70U);
  EXPECT_EQ(find(reports, IdentityId::kG18).grid_size, 12U);
  EXPECT_EQ(find(reports, IdentityId::kG18).skipped, 2U);
  // r in 1..3 against n in 0..6: (n, r) pairs with r <= n number 0+1+2+3+3+3+3.
  EXPECT_EQ(find(reports, IdentityId::kG19Proof).grid_size, 30U);
  EXPECT_EQ(find(reports, IdentityId::kG19Proof).skipped, 12U);
}

TEST(Sweep, Verdicts) {
  const auto reports = sweep(small_config({IdentityId::kF12Simplified, IdentityId::kG11, IdentityId::kG10}));
  EXPECT_EQ(find(reports, IdentityId::kF12Simplified).verdict, Verdict::kHoldsOnlyAtKOne);
  EXPECT_EQ(find(reports, IdentityId::kG11).verdict, Verdict::kFails);
  EXPECT_EQ(find(reports, IdentityId::kG10).verdict, Verdict::kHolds);
}

TEST(Sweep, WithoutKOneNoPartialVerdict) {
  SweepConfig config = small_config({IdentityId::kF12Simplified});
  config.k_values = {R(2), R(3)};
  EXPECT_EQ(sweep(config)[0].verdict, Verdict::kFails);
}

TEST(Sweep, NonPositiveKRecordedAsFailure) {
  SweepConfig config = small_config({IdentityId::kF13});
  config.k_values = {R(-1)};
  config.n_range = {0, 2};
  const auto reports = sweep(config);
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].failures, 3U);
  EXPECT_EQ(reports[0].verdict, Verdict::kFails);
  ASSERT_FALSE(reports[0].counterexamples.empty());
  EXPECT_FALSE(reports[0].counterexamples[0].error.empty());
  EXPECT_FALSE(reports[0].counterexamples[0].lhs.has_value());
}

TEST(Sweep, CounterexamplesAreGenuineAndOrdered) {
  SweepConfig config = small_config({IdentityId::kF31, IdentityId::kG19Stated});
  config.max_counterexamples = 3;
  for (const auto& report : sweep(config)) {
    ASSERT_LE(report.counterexamples.size(), 3U);
    ASSERT_GE(report.failures, report.counterexamples.size());
    for (const auto& cex : report.counterexamples) {
      const auto result = check_one(report.id, cex.bindings);
      EXPECT_FALSE(result.equal);
      EXPECT_EQ(result.lhs, *cex.lhs);
      EXPECT_EQ(result.rhs, *cex.rhs);
    }
  }
  const auto f31 = sweep(small_config({IdentityId::kF31}))[0];
  ASSERT_GE(f31.counterexamples.size(), 2U);
  EXPECT_EQ(f31.counterexamples[0].bindings, (Bindings{R(2), 0, std::nullopt, std::nullopt}));
  EXPECT_EQ(f31.counterexamples[1].bindings, (Bindings{R(2), 1, std::nullopt, std::nullopt}));
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  SweepConfig config = small_config({});
  for (const auto& info : identity_catalog()) config.ids.push_back(info.id);
  config.threads = 1;
  const std::string one = reports_to_json(sweep(config), false).dump();
  config.threads = 4;
  const std::string four = reports_to_json(sweep(config), false).dump();
  EXPECT_EQ(one, four);
}

TEST(Sweep, DuplicateIdsAndKValuesCollapse) {
  SweepConfig config = small_config({IdentityId::kF13, IdentityId::kF13});
  config.k_values = {R(2), R(1), R(2)};
  const auto reports = sweep(config);
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].grid_size, 14U);
}

TEST(Adjudicate, KnownVerdicts) {
  EXPECT_EQ(adjudicate(IdentityId::kG18), Verdict::kHolds);
  EXPECT_EQ(adjudicate(IdentityId::kF22Simplified), Verdict::kHoldsOnlyAtKOne);
  EXPECT_EQ(adjudicate(IdentityId::kG19Stated), Verdict::kFails);
}

TEST(Output, SummaryFormatsAgree) {
  const auto reports = sweep(small_config({IdentityId::kF13, IdentityId::kF31}));
  const std::string csv = summary_csv(reports);
  const auto json = reports_to_json(reports, false);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "identity,verdict,grid_size,skipped");
  for (std::size_t idx = 0; idx < reports.size(); ++idx) {
    ASSERT_TRUE(std::getline(lines, line));
    const auto& entry = json[idx];
    EXPECT_EQ(line, entry["identity"].get<std::string>() + "," + entry["verdict"].get<std::string>() + "," +
                        std::to_string(entry["grid_size"].get<std::size_t>()) + "," +
                        std::to_string(entry["skipped"].get<std::size_t>()));
    std::string spaced = line;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    EXPECT_EQ(summary_line(reports[idx]), spaced);
  }
  EXPECT_EQ(summary_line(reports[1]), "f31 holds_only_k1 14 0");
}

TEST(Output, TimingIsOptional) {
  const auto reports = sweep(small_config({IdentityId::kF13}));
  EXPECT_TRUE(report_to_json(reports[0], true).contains("elapsed_ms"));
  EXPECT_EQ(report_to_json(reports[0], false)["elapsed_ms"].get<double>(), 0.0);
}

TEST(Golden, DefaultSweepIsByteIdentical) {
  std::ifstream in(DCKPELL_GOLDEN_SWEEP, std::ios::binary);
  ASSERT_TRUE(in) << DCKPELL_GOLDEN_SWEEP;
  std::stringstream golden;
  golden << in.rdbuf();
  const std::string produced = reports_to_json(sweep(default_sweep_config()), false).dump(2) + "\n";
  EXPECT_EQ(produced, golden.str());
}

}  // namespace
}  // namespace dckpell

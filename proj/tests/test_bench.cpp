#include <gtest/gtest.h>

#include <cstdlib>

#include "cpair/bench.hpp"

using namespace cpair;

namespace {

BenchRecord sample_record() {
  return {64, 1024, 8, "dev:1", 1, 5000, 3, 99, 12345, 67890, true, 2};
}

BenchConfig small_config() {
  BenchConfig c;
  c.d = 32;
  c.n = 128;
  c.gamma_counts = {4, 8, 12};
  c.trials = 5;
  c.seed = 3;
  c.settings.strategy = Strategy::deviation(1);
  c.settings.max_branching = 2000;
  return c;
}

}  // namespace

TEST(Csv, OneRecordTwoLines) {
  const std::string csv = emit_csv({sample_record()});
  EXPECT_EQ(csv, std::string(kCsvHeader) + "\n64,1024,8,dev:1,1,5000,3,99,12345,67890,1,2\n");
  EXPECT_THROW((void)emit_csv({}), std::invalid_argument);
}

TEST(Csv, RoundTrip) {
  auto second = sample_record();
  second.found = false;
  second.strategy = "atmost";
  second.trial = 4;
  const std::vector<BenchRecord> records{sample_record(), second};
  EXPECT_EQ(parse_csv(emit_csv(records)), records);
}

TEST(Csv, ParseErrors) {
  EXPECT_THROW((void)parse_csv(""), std::invalid_argument);
  EXPECT_THROW((void)parse_csv("d,n\n"), std::invalid_argument);
  EXPECT_THROW((void)parse_csv(std::string(kCsvHeader) + "\n1,2,3\n"), std::invalid_argument);
  EXPECT_THROW((void)parse_csv(std::string(kCsvHeader) + "\n64,1024,8,exact,1,5,3,99,1,1,2,0\n"),
               std::invalid_argument);
}

TEST(GammaSweep, Points) {
  EXPECT_EQ(gamma_sweep(64, 0.0, 0.25, 0.125), (std::vector<std::size_t>{0, 8, 16}));
  EXPECT_EQ(default_gamma_sweep(60).size(), 16u);
  EXPECT_EQ(default_gamma_sweep(60).back(), 30u);
  EXPECT_THROW((void)gamma_sweep(64, 0.0, 0.6, 0.1), std::invalid_argument);
  EXPECT_THROW((void)gamma_sweep(64, 0.0, 0.5, 0.0), std::invalid_argument);
}

TEST(Bench, RowCountOrderAndDeterminism) {
  auto config = small_config();
  config.threads = 1;
  const auto serial = run_bench(config);
  ASSERT_EQ(serial.size(), 15u);
  for (std::size_t t = 0; t < serial.size(); ++t) {
    EXPECT_EQ(serial[t].gamma_count, config.gamma_counts[t / 5]);
    EXPECT_EQ(serial[t].trial, t % 5);
    EXPECT_GT(serial[t].solver_ns, 0u);
    EXPECT_GT(serial[t].naive_ns, 0u);
    EXPECT_EQ(serial[t].strategy, "dev:1");
  }
  config.threads = 3;
  auto parallel = run_bench(config);
  auto strip = [](std::vector<BenchRecord> rows) {
    for (auto& r : rows) r.solver_ns = r.naive_ns = 0;
    return rows;
  };
  EXPECT_EQ(strip(parallel), strip(serial));
  EXPECT_EQ(parse_csv(emit_csv(serial)).size(), 15u);
}

TEST(Bench, ThreadsFromEnvironment) {
  ::setenv("CP_THREADS", "3", 1);
  EXPECT_EQ(bench_threads(), 3u);
  ::setenv("CP_THREADS", "zero", 1);
  EXPECT_GE(bench_threads(), 1u);
  ::unsetenv("CP_THREADS");
}

TEST(Bench, Summary) {
  std::vector<BenchRecord> rows;
  for (std::uint64_t t = 0; t < 4; ++t) {
    auto r = sample_record();
    r.trial = t;
    r.solver_ns = 10 * (t + 1);
    r.naive_ns = 100;
    r.found = t != 0;
    rows.push_back(r);
  }
  const auto s = summarize(rows);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s[0].median_solver_ns, 25.0);
  EXPECT_DOUBLE_EQ(s[0].mean_solver_ns, 25.0);
  EXPECT_DOUBLE_EQ(s[0].median_naive_ns, 100.0);
  EXPECT_DOUBLE_EQ(s[0].found_rate, 0.75);
  EXPECT_DOUBLE_EQ(median({3.0, 1.0, 2.0}), 2.0);
}

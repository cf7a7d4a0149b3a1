#pragma once

// Timed solver-versus-baseline trials and their CSV form.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cpair/distribution.hpp"
#include "cpair/tuning.hpp"

namespace cpair {

struct BenchRecord {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t gamma_count = 0;
  std::string strategy;
  std::size_t depth = 0;
  std::uint64_t branching = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t solver_ns = 0;
  std::uint64_t naive_ns = 0;
  bool found = false;
  std::size_t pairs = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "d,n,gamma,strategy,depth,branching,trial,seed,solver_ns,naive_ns,found,pairs";

// Throws std::invalid_argument for an empty record set.
[[nodiscard]] std::string emit_csv(const std::vector<BenchRecord>& records);
// Inverse of emit_csv; throws std::invalid_argument naming the bad line.
[[nodiscard]] std::vector<BenchRecord> parse_csv(std::string_view csv);

struct BenchConfig {
  std::size_t d = 64;
  std::size_t n = 1024;
  std::vector<std::size_t> gamma_counts;
  DistributionModel model;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  PracticalSettings settings;
  bool run_naive = true;
  std::size_t threads = 0;  // 0: bench_threads()
};

// Rounded gamma * d for gamma = from, from + step, ... <= to, deduplicated.
[[nodiscard]] std::vector<std::size_t> gamma_sweep(std::size_t d, double from, double to,
                                                   double step);
// Sixteen evenly spaced points on [0, 1/2].
[[nodiscard]] std::vector<std::size_t> default_gamma_sweep(std::size_t d);

// CP_THREADS when set to a positive integer, else the hardware concurrency.
[[nodiscard]] std::size_t bench_threads();

// One record per (gamma, trial), sorted by (gamma, trial) whatever the
// thread count.
[[nodiscard]] std::vector<BenchRecord> run_bench(const BenchConfig& config);

struct BenchSummary {
  std::size_t gamma_count = 0;
  std::size_t trials = 0;
  double median_solver_ns = 0.0;
  double mean_solver_ns = 0.0;
  double median_naive_ns = 0.0;
  double mean_naive_ns = 0.0;
  double found_rate = 0.0;
};

[[nodiscard]] double median(std::vector<double> values);
[[nodiscard]] std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

}  // namespace cpair

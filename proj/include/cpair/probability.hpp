#pragma once

// Binary entropy, bucket probabilities and their enumeration oracle.
//
// All logarithms are base 2. Impossible events carry the LogProb sentinel
// (log value -inf); adding log-probabilities (multiplying probabilities)
// saturates at the sentinel.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>

#include "cpair/params.hpp"

namespace cpair::analysis {

class LogProb {
 public:
  constexpr LogProb() noexcept = default;  // impossible

  static constexpr LogProb impossible() noexcept { return LogProb(); }
  // Accepts any value <= 0 (or the -inf sentinel).
  static LogProb from_log2(double log2_value);
  static LogProb from_probability(double p);

  [[nodiscard]] constexpr bool is_impossible() const noexcept {
    return value_ == -std::numeric_limits<double>::infinity();
  }
  [[nodiscard]] constexpr double log2() const noexcept { return value_; }
  [[nodiscard]] double probability() const noexcept;

  friend constexpr LogProb operator+(LogProb a, LogProb b) noexcept {
    if (a.is_impossible() || b.is_impossible()) return impossible();
    return LogProb(a.value_ + b.value_);
  }
  friend constexpr auto operator<=>(LogProb, LogProb) noexcept = default;

 private:
  constexpr explicit LogProb(double v) noexcept : value_(v) {}

  double value_ = -std::numeric_limits<double>::infinity();
};

// H(x) = -x log x - (1-x) log(1-x), H(0) = H(1) = 0. Domain [0, 1].
[[nodiscard]] double binary_entropy(double x);
// The x in [0, 1/2] with H(x) = y, by bisection to full double precision.
[[nodiscard]] double inverse_entropy(double y);

// log2 C(n, k) via lgamma; -inf when k is outside [0, n].
[[nodiscard]] double log2_binomial(double n, double k) noexcept;
// Exact C(n, k); throws std::overflow_error beyond 64 bits.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Pr_z[wt(x + z) = round(delta k)] over uniform z in F_2^k.
[[nodiscard]] LogProb bucket_prob_p(std::size_t k, double delta);
// Pr_z[wt(x + z) = wt(y + z) = round(delta k)] for wt(x + y) = g, where g is
// gamma k rounded to the nearest even integer.
[[nodiscard]] LogProb pair_survival_prob_q(std::size_t k, double gamma, double delta);

// The same closed forms as exact integer counts of z out of 2^k.
[[nodiscard]] std::uint64_t bucket_count_p(std::size_t k, std::size_t delta_count);
[[nodiscard]] std::uint64_t pair_survival_count_q(std::size_t k, std::size_t gamma_count,
                                                  std::size_t delta_count);

struct ProbPair {
  LogProb log_p;
  LogProb log_q;
};

// Exact p and q for an arbitrary acceptance rule: sums over every accepted
// weight (for p) and every accepted pair of weights (for q).
[[nodiscard]] ProbPair strategy_probabilities(std::size_t k, std::size_t gamma_count,
                                              std::size_t delta_count, Strategy strategy);

struct OracleCounts {
  std::uint64_t count_p = 0;
  std::uint64_t count_q = 0;

  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

// Brute force over all 2^k vectors z with x = 0 and y = first gamma_count
// coordinates set. Throws std::invalid_argument for k > 20.
[[nodiscard]] OracleCounts enumerate_pq_oracle(std::size_t k, std::size_t gamma_count,
                                               std::size_t delta_count);

}  // namespace cpair::analysis

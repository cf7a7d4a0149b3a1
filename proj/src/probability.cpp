#include "cpair/probability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpair::analysis {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log2(2^a + 2^b)
double log2_add(double a, double b) noexcept {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

// Nearest even integer to x (ties resolved by llround on x / 2).
long long nearest_even(double x) noexcept { return 2 * std::llround(x / 2.0); }

}  // namespace

LogProb LogProb::from_log2(double log2_value) {
  if (std::isnan(log2_value) || log2_value > 1e-12) {
    throw std::domain_error("log-probability must be <= 0");
  }
  return LogProb(std::min(log2_value, 0.0));
}

LogProb LogProb::from_probability(double p) {
  require_unit_interval(p, "probability");
  return p == 0.0 ? impossible() : LogProb(std::log2(p));
}

double LogProb::probability() const noexcept { return is_impossible() ? 0.0 : std::exp2(value_); }

double binary_entropy(double x) {
  require_unit_interval(x, "entropy argument");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log1p(-x) / std::numbers::ln2;
}

double inverse_entropy(double y) {
  require_unit_interval(y, "entropy value");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (binary_entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

double log2_binomial(double n, double k) noexcept {
  if (k < 0.0 || k > n) return kNegInf;
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
         std::numbers::ln2;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

LogProb bucket_prob_p(std::size_t k, double delta) {
  if (k == 0) throw std::invalid_argument("block width must be at least 1");
  require_unit_interval(delta, "delta");
  const double kd = static_cast<double>(k);
  const auto m = static_cast<double>(std::llround(delta * kd));
  return LogProb::from_log2(log2_binomial(kd, m) - kd);
}

LogProb pair_survival_prob_q(std::size_t k, double gamma, double delta) {
  if (k == 0) throw std::invalid_argument("block width must be at least 1");
  require_unit_interval(gamma, "gamma");
  require_unit_interval(delta, "delta");
  const double kd = static_cast<double>(k);
  const long long g = nearest_even(gamma * kd);
  const long long m = std::llround(delta * kd);
  const long long a = m - g / 2;
  if (g > static_cast<long long>(k) || a < 0 || a > static_cast<long long>(k) - g) {
    return LogProb::impossible();
  }
  const auto gd = static_cast<double>(g);
  return LogProb::from_log2(log2_binomial(gd, gd / 2.0) +
                            log2_binomial(kd - gd, static_cast<double>(a)) - kd);
}

std::uint64_t bucket_count_p(std::size_t k, std::size_t delta_count) {
  return binomial(k, delta_count);
}

std::uint64_t pair_survival_count_q(std::size_t k, std::size_t gamma_count,
                                    std::size_t delta_count) {
  if (gamma_count % 2 != 0 || gamma_count > k || 2 * delta_count < gamma_count) return 0;
  const std::size_t a = delta_count - gamma_count / 2;
  if (a > k - gamma_count) return 0;
  return binomial(gamma_count, gamma_count / 2) * binomial(k - gamma_count, a);
}

ProbPair strategy_probabilities(std::size_t k, std::size_t gamma_count, std::size_t delta_count,
                                Strategy strategy) {
  if (k == 0) throw std::invalid_argument("block width must be at least 1");
  if (gamma_count > k) throw std::invalid_argument("gamma_count exceeds block width");

  // Accepted single weights form the interval [wlo, whi].
  const auto m = static_cast<long long>(delta_count);
  long long wlo = m;
  long long whi = m;
  switch (strategy.kind) {
    case Strategy::Kind::Exact:
      break;
    case Strategy::Kind::Deviation:
      wlo = std::max<long long>(0, m - static_cast<long long>(strategy.eps));
      whi = m + static_cast<long long>(strategy.eps);
      break;
    case Strategy::Kind::AtMost:
      wlo = 0;
      break;
  }
  const auto kk = static_cast<long long>(k);
  const double kd = static_cast<double>(k);

  double log_p = kNegInf;
  for (long long w = wlo; w <= std::min(whi, kk); ++w) {
    log_p = log2_add(log_p, log2_binomial(kd, static_cast<double>(w)));
  }

  // a = coordinates where x and y agree but z differs from both; b = the
  // coordinates where x and y differ and z differs from x.
  // wt(x+z) = a + b, wt(y+z) = a + g - b.
  const auto g = static_cast<long long>(gamma_count);
  const long long shared = kk - g;
  const double shared_d = static_cast<double>(shared);
  std::vector<double> prefix(static_cast<std::size_t>(shared) + 1);
  double running = kNegInf;
  for (long long a = 0; a <= shared; ++a) {
    running = log2_add(running, log2_binomial(shared_d, static_cast<double>(a)));
    prefix[static_cast<std::size_t>(a)] = running;
  }
  double log_q = kNegInf;
  for (long long b = 0; b <= g; ++b) {
    const long long lo = std::max({wlo - b, wlo - g + b, 0LL});
    const long long hi = std::min({whi - b, whi - g + b, shared});
    if (lo > hi) continue;
    double inner = kNegInf;
    if (lo == 0) {
      inner = prefix[static_cast<std::size_t>(hi)];
    } else {
      for (long long a = lo; a <= hi; ++a) {
        inner = log2_add(inner, log2_binomial(shared_d, static_cast<double>(a)));
      }
    }
    log_q = log2_add(log_q, log2_binomial(static_cast<double>(g), static_cast<double>(b)) + inner);
  }

  auto to_logprob = [kd](double log_count) {
    return log_count == kNegInf ? LogProb::impossible() : LogProb::from_log2(log_count - kd);
  };
  return {to_logprob(log_p), to_logprob(log_q)};
}

OracleCounts enumerate_pq_oracle(std::size_t k, std::size_t gamma_count,
                                 std::size_t delta_count) {
  if (k > 20) throw std::invalid_argument("enumeration oracle limited to k <= 20");
  if (gamma_count > k || delta_count > k) {
    throw std::invalid_argument("gamma_count and delta_count must not exceed k");
  }
  const std::uint32_t y = gamma_count == 0 ? 0U : (std::uint32_t{1} << gamma_count) - 1U;
  OracleCounts counts;
  for (std::uint32_t z = 0; z < (std::uint32_t{1} << k); ++z) {
    if (static_cast<std::size_t>(std::popcount(z)) != delta_count) continue;
    ++counts.count_p;
    if (static_cast<std::size_t>(std::popcount(z ^ y)) == delta_count) ++counts.count_q;
  }
  return counts;
}

}  // namespace cpair::analysis

#include "cpair/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cpair/bit_vector.hpp"
#include "cpair/exponents.hpp"
#include "cpair/probability.hpp"

namespace cpair {

namespace {

analysis::ProbPair block_probs(std::size_t width, double gamma, double delta, Strategy strategy) {
  if (strategy.kind == Strategy::Kind::Exact) {
    return {analysis::bucket_prob_p(width, delta),
            analysis::pair_survival_prob_q(width, gamma, delta)};
  }
  const auto g = static_cast<std::size_t>(std::llround(gamma * static_cast<double>(width)));
  return analysis::strategy_probabilities(width, std::min(g, width),
                                          delta_count_for(delta, width), strategy);
}

std::size_t default_depth(std::size_t d, double lambda, std::size_t max_depth) {
  const double log_d = std::log2(static_cast<double>(d));
  const double theoretical = log_d > 0.0 ? lambda * static_cast<double>(d) / (log_d * log_d) : 0.0;
  const std::size_t cap = std::min(max_depth, std::max<std::size_t>(1, d / 4));
  const auto r = static_cast<std::size_t>(std::max(0.0, std::floor(theoretical)));
  return std::clamp<std::size_t>(r, 1, std::max<std::size_t>(1, cap));
}

std::uint64_t branching_for(std::size_t d, analysis::LogProb log_q, std::uint64_t max_branching) {
  const double log_n = std::log2(static_cast<double>(d)) - log_q.log2();
  const double cap = static_cast<double>(std::max<std::uint64_t>(1, max_branching));
  return static_cast<std::uint64_t>(std::clamp(std::round(std::exp2(std::min(log_n, 63.0))), 1.0, cap));
}

}  // namespace

double estimate_search_cost(std::size_t d, double n, double gamma, std::size_t depth,
                            double delta, Strategy strategy, std::uint64_t branching) {
  const BlockSpec spec(d, depth);
  std::vector<analysis::ProbPair> levels;
  for (std::size_t level = 1; level <= depth; ++level) {
    levels.push_back(block_probs(spec.width(level), gamma, delta, strategy));
  }
  if (levels.front().log_q.is_impossible()) return std::numeric_limits<double>::infinity();
  // Full cost of a subtree rooted at `level` whose lists hold `size` rows.
  const auto subtree = [&](auto&& self, std::size_t level, double size) -> double {
    if (level == depth) return size * size + 1.0;
    const double p = levels[level].log_p.probability();
    return static_cast<double>(branching) * (2.0 * size + self(self, level + 1, size * p));
  };
  const double draws = std::exp2(-levels.front().log_q.log2());
  return draws * (2.0 * n + subtree(subtree, 1, n * levels.front().log_p.probability()));
}

SolverParams choose_params(std::size_t d, double lambda, double gamma,
                           const PracticalSettings& settings) {
  if (d == 0) throw std::invalid_argument("dimension must be at least 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 0.5)) throw std::invalid_argument("gamma must lie in [0, 1/2]");

  SolverParams params;
  params.strategy = settings.strategy;
  params.depth = settings.depth.value_or(default_depth(d, lambda, settings.max_depth));
  params.delta = settings.delta.value_or(analysis::theta_uniform(lambda, gamma).delta);

  if (settings.tune && !(settings.depth && settings.delta)) {
    const double n = std::exp2(lambda * static_cast<double>(d));
    const std::size_t max_r = std::max<std::size_t>(1, std::min(settings.max_depth, d / 4));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 1; r <= max_r; ++r) {
      if (settings.depth && *settings.depth != r) continue;
      const std::size_t k = d / r;
      for (std::size_t m = 0; m <= k / 2; ++m) {
        const double delta = settings.delta.value_or(static_cast<double>(m) / static_cast<double>(k));
        const auto probs = block_probs(k, gamma, delta, settings.strategy);
        if (probs.log_q.is_impossible()) continue;
        const std::uint64_t branching =
            settings.branching.value_or(branching_for(d, probs.log_q, settings.max_branching));
        const double cost =
            estimate_search_cost(d, n, gamma, r, delta, settings.strategy, branching);
        if (cost < best) {
          best = cost;
          params.depth = r;
          params.delta = delta;
        }
        if (settings.delta) break;
      }
    }
  }

  const BlockSpec spec(d, params.depth);
  const auto probs = block_probs(spec.nominal_width(), gamma, params.delta, params.strategy);
  if (probs.log_q.is_impossible()) {
    throw std::domain_error("bucket criterion can never keep a pair at this distance");
  }
  params.branching =
      settings.branching.value_or(branching_for(d, probs.log_q, settings.max_branching));
  params.permutations = settings.permutations.value_or(4);
  params.naive_threshold = settings.naive_threshold.value_or(32);
  params.stop_on_first = settings.stop_on_first.value_or(true);
  params.validate();
  return params;
}

}  // namespace cpair

#pragma once

// Parameter selection for the bucketing search.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "cpair/params.hpp"

namespace cpair {

// Caller overrides; anything left empty is derived from (d, lambda, gamma).
struct PracticalSettings {
  std::optional<std::size_t> depth;
  std::optional<std::uint64_t> branching;
  std::optional<std::size_t> permutations;
  std::optional<double> delta;
  std::optional<std::size_t> naive_threshold;
  std::optional<bool> stop_on_first;
  Strategy strategy = Strategy::exact();
  std::uint64_t max_branching = std::uint64_t{1} << 22;
  std::size_t max_depth = 8;
  // Pick depth and delta by minimising estimate_search_cost instead of the
  // asymptotic choice. Explicit depth/delta overrides still win.
  bool tune = false;
};

// Throws std::invalid_argument for d == 0, lambda outside [0, 1] or gamma
// outside [0, 1/2], and std::domain_error when the chosen (gamma, delta)
// makes the per-block survival probability zero.
[[nodiscard]] SolverParams choose_params(std::size_t d, double lambda, double gamma,
                                         const PracticalSettings& settings = {});

// Expected row operations of a depth-first round with N = branching buckets
// per node that stops once the planted pair is reached: about 1/q level-1
// buckets, each paying 2n for the partition plus a full child subtree
//   F(s) = N (2s + F(s p)) above the leaves, s^2 + 1 at a leaf.
// Returns +inf when q = 0.
[[nodiscard]] double estimate_search_cost(std::size_t d, double n, double gamma,
                                          std::size_t depth, double delta, Strategy strategy,
                                          std::uint64_t branching);

}  // namespace cpair

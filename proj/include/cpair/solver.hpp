#pragma once

// Recursive bucketing search for the bichromatic closest pair, run
// depth-first over one in-place working copy, and the quadratic baseline.

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cpair/bit_vector.hpp"
#include "cpair/instance.hpp"
#include "cpair/kernels.hpp"
#include "cpair/params.hpp"
#include "cpair/random.hpp"

namespace cpair {

struct MatchPair {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t dist = 0;

  friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

struct SolveReport {
  std::vector<MatchPair> matches;  // sorted by (i, j), no duplicates
  std::uint64_t nodes_visited = 0;
  std::uint64_t naive_comparisons = 0;
  std::chrono::nanoseconds wall_time{0};
  std::optional<bool> planted_found;  // empty when the instance has no planted pair
};

// Rows of one list packed back to back, each tagged with its index in the
// input list. Partitioning moves rows and tags together.
class PackedList {
 public:
  explicit PackedList(const std::vector<BitVector>& vectors);
  PackedList(const std::vector<BitVector>& vectors, const Permutation& perm);

  [[nodiscard]] std::size_t size() const noexcept { return origin_.size(); }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }
  [[nodiscard]] const std::uint64_t* row(std::size_t t) const noexcept {
    return rows_.data() + t * words_;
  }
  [[nodiscard]] std::uint32_t origin(std::size_t t) const noexcept { return origin_[t]; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;

  // Rows of [begin, end) whose block weight against the aligned z passes
  // `strategy` are moved to the front; returns the end of that prefix.
  std::size_t partition(std::size_t begin, std::size_t end, const std::uint64_t* aligned_z,
                        const BlockWindow& win, std::size_t delta_count, Strategy strategy) noexcept;

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint32_t> origin_;
};

// Every (i, j) with distance(list1[i], list2[j]) = gamma_count, in
// lexicographic order.
[[nodiscard]] std::vector<MatchPair> naive_search(const Instance& inst, std::size_t gamma_count);

// Block-local z wrapper around PackedList::partition. Returns the prefix end.
std::size_t partition_in_place(PackedList& list, std::size_t begin, std::size_t end,
                               const BitVector& z, const BlockSpec& spec, std::size_t block,
                               std::size_t delta_count, Strategy strategy);

// Throws std::invalid_argument for invalid params or instance.
[[nodiscard]] SolveReport solve(const Instance& inst, const SolverParams& params,
                                RandomSource& rng);

// Fraction of `trials` fresh level-1 buckets (Exact rule, block 1 of a
// params.depth split, target round(delta * width)) that keep both planted
// vectors. Throws std::invalid_argument without a planted pair or trials.
[[nodiscard]] double survival_rate_probe(const Instance& inst, const SolverParams& params,
                                         RandomSource& rng, std::size_t trials);

}  // namespace cpair

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace cpair {

// Bucket membership rule applied to wt(block_i(v + z)).
struct Strategy {
  enum class Kind { Exact, Deviation, AtMost };

  Kind kind = Kind::Exact;
  std::size_t eps = 0;  // Deviation only

  static constexpr Strategy exact() noexcept { return {Kind::Exact, 0}; }
  static constexpr Strategy deviation(std::size_t eps) noexcept { return {Kind::Deviation, eps}; }
  static constexpr Strategy at_most() noexcept { return {Kind::AtMost, 0}; }

  // "exact", "dev:<eps>", "atmost"
  [[nodiscard]] std::string label() const;
  static Strategy parse(std::string_view text);

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

constexpr bool bucket_accept(std::size_t wt, std::size_t delta_count, Strategy strategy) noexcept {
  switch (strategy.kind) {
    case Strategy::Kind::Exact:
      return wt == delta_count;
    case Strategy::Kind::Deviation:
      return (wt > delta_count ? wt - delta_count : delta_count - wt) <= strategy.eps;
    case Strategy::Kind::AtMost:
      return wt <= delta_count;
  }
  return false;
}

struct SolverParams {
  std::size_t depth = 1;         // tree depth r; block count of the split
  std::uint64_t branching = 1;   // N buckets drawn per node
  std::size_t permutations = 4;  // P outer rounds; round 1 is the identity
  double delta = 0.5;            // bucket weight fraction of the block width
  Strategy strategy = Strategy::exact();
  std::size_t naive_threshold = 32;
  bool stop_on_first = true;

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

// round(delta * width), the per-block target weight.
[[nodiscard]] std::size_t delta_count_for(double delta, std::size_t width) noexcept;

}  // namespace cpair

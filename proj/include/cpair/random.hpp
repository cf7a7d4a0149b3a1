#pragma once

// Counter-based deterministic random source.
//
// Output word t of a source seeded with s is mix(s + t * golden), a pure
// function of (seed, counter). Sub-streams are derived with split(), so
// parallel trials can each own an independent stream without sharing state.

#include <cstdint>
#include <limits>

namespace cpair {

class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept {
    ++counter_;
    return mix(seed_ + counter_ * kGolden);
  }

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) noexcept { return uniform_real() < p; }

  // Independent stream keyed by `stream`; does not advance this source.
  [[nodiscard]] RandomSource split(std::uint64_t stream) const noexcept {
    return RandomSource(mix(seed_ ^ mix(stream + kGolden)));
  }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  // SplitMix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace cpair

#include "cpair/random.hpp"

namespace cpair {

__extension__ typedef unsigned __int128 u128;

// Lemire's multiply-shift rejection; unbiased for every bound.
std::uint64_t RandomSource::uniform_below(std::uint64_t bound) noexcept {
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace cpair

#pragma once

// Word-level kernels over raw packed rows. These are the hot loops of the
// bucketing search; they work on rows stored contiguously rather than on
// individual BitVector objects.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cpair/bit_vector.hpp"

namespace cpair {

// Word span and edge masks covering one block of a packed row.
struct BlockWindow {
  std::size_t first_word = 0;
  std::size_t last_word = 0;
  std::uint64_t first_mask = 0;
  std::uint64_t last_mask = 0;
};

[[nodiscard]] BlockWindow make_window(const BlockSpec& spec, std::size_t block);

// Full-width word array holding block-local z at the block's coordinates and
// zeros elsewhere.
[[nodiscard]] std::vector<std::uint64_t> align_block(const BitVector& z, const BlockSpec& spec,
                                                     std::size_t block);

inline std::size_t window_weight(const std::uint64_t* row, const std::uint64_t* aligned_z,
                                 const BlockWindow& win) noexcept {
  if (win.first_word == win.last_word) {
    return static_cast<std::size_t>(std::popcount(
        (row[win.first_word] ^ aligned_z[win.first_word]) & win.first_mask & win.last_mask));
  }
  std::size_t total = static_cast<std::size_t>(
      std::popcount((row[win.first_word] ^ aligned_z[win.first_word]) & win.first_mask));
  for (std::size_t w = win.first_word + 1; w < win.last_word; ++w) {
    total += static_cast<std::size_t>(std::popcount(row[w] ^ aligned_z[w]));
  }
  total += static_cast<std::size_t>(
      std::popcount((row[win.last_word] ^ aligned_z[win.last_word]) & win.last_mask));
  return total;
}

inline std::size_t row_distance(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words) noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    total += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  }
  return total;
}

}  // namespace cpair

namespace cpair {

// Calls emit(a, b) for every row a of A and b of B at distance `target`.
// Rows are `words` wide and stored back to back. Returns false as soon as
// emit does, true otherwise.
template <typename Emit>
bool scan_pairs(const std::uint64_t* a_rows, std::size_t a_count, const std::uint64_t* b_rows,
                std::size_t b_count, std::size_t words, std::size_t target, Emit&& emit) {
  if (words == 1) {
    for (std::size_t a = 0; a < a_count; ++a) {
      const std::uint64_t x = a_rows[a];
      for (std::size_t b = 0; b < b_count; ++b) {
        if (static_cast<std::size_t>(std::popcount(x ^ b_rows[b])) == target && !emit(a, b)) {
          return false;
        }
      }
    }
    return true;
  }
  for (std::size_t a = 0; a < a_count; ++a) {
    const std::uint64_t* x = a_rows + a * words;
    for (std::size_t b = 0; b < b_count; ++b) {
      if (row_distance(x, b_rows + b * words, words) == target && !emit(a, b)) return false;
    }
  }
  return true;
}

}  // namespace cpair

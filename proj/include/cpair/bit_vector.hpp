#pragma once

// Packed binary vectors over F_2^d and the block/permutation primitives the
// bucketing search is built from.
//
// Coordinate j (0-based here; coordinate j+1 in 1-based math notation) lives
// in bit j % 64 of word j / 64. Bits at positions >= dim in the last word are
// always zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpair/random.hpp"

namespace cpair {

class BitVector {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxDim = std::size_t{1} << 20;

  // All-zero vector. Throws std::invalid_argument unless 1 <= dim <= kMaxDim.
  explicit BitVector(std::size_t dim);

  // Takes ownership of packed words; rejects wrong length or nonzero padding.
  static BitVector from_words(std::size_t dim, std::vector<std::uint64_t> words);
  // "1100" sets coordinates 0 and 1. Only '0' and '1' are accepted.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t dim);

  static constexpr std::size_t words_for(std::size_t dim) noexcept {
    return (dim + kWordBits - 1) / kWordBits;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  [[nodiscard]] bool get(std::size_t index) const {
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
  }
  void set(std::size_t index, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (index % kWordBits);
    if (value) {
      words_[index / kWordBits] |= mask;
    } else {
      words_[index / kWordBits] &= ~mask;
    }
  }

  [[nodiscard]] bool is_canonical() const noexcept;
  [[nodiscard]] std::string to_string() const;

  // In-place coordinatewise sum over F_2.
  BitVector& operator^=(const BitVector& other);

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  BitVector(std::size_t dim, std::vector<std::uint64_t> words) noexcept
      : dim_(dim), words_(std::move(words)) {}

  std::size_t dim_;
  std::vector<std::uint64_t> words_;
};

// Mask of the valid bits in the last word of a dim-bit vector.
constexpr std::uint64_t tail_mask(std::size_t dim) noexcept {
  const std::size_t used = dim % BitVector::kWordBits;
  return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
}

[[nodiscard]] std::size_t weight(const BitVector& v) noexcept;
[[nodiscard]] BitVector operator^(const BitVector& v, const BitVector& w);
[[nodiscard]] std::size_t distance(const BitVector& v, const BitVector& w);
[[nodiscard]] BitVector complement(const BitVector& v);

// Splits [0, dim) into r contiguous blocks. Blocks 1..r-1 have width
// k = dim / r; block r absorbs the remainder.
class BlockSpec {
 public:
  BlockSpec(std::size_t dim, std::size_t blocks);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::size_t nominal_width() const noexcept { return width_; }

  // Blocks are numbered 1..blocks(); out-of-range indices throw.
  [[nodiscard]] std::size_t first(std::size_t block) const;
  [[nodiscard]] std::size_t width(std::size_t block) const;

 private:
  std::size_t dim_;
  std::size_t blocks_;
  std::size_t width_;
};

// Block-local copy of coordinates [first(i), first(i) + width(i)).
[[nodiscard]] BitVector block_projection(const BitVector& v, const BlockSpec& spec,
                                         std::size_t block);

// wt(block_i(v) + z) for a block-local z of width spec.width(block).
[[nodiscard]] std::size_t block_weight(const BitVector& v, const BitVector& z,
                                       const BlockSpec& spec, std::size_t block);

class Permutation {
 public:
  // images[j] is the target coordinate of coordinate j; must be a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t dim);
  static Permutation random(std::size_t dim, RandomSource& rng);

  [[nodiscard]] std::size_t dim() const noexcept { return images_.size(); }
  [[nodiscard]] std::uint32_t image(std::size_t index) const { return images_[index]; }
  [[nodiscard]] std::span<const std::uint32_t> images() const noexcept { return images_; }
  [[nodiscard]] Permutation inverse() const;

 private:
  std::vector<std::uint32_t> images_;
};

// Coordinate perm.image(j) of the result equals coordinate j of v.
[[nodiscard]] BitVector apply_permutation(const BitVector& v, const Permutation& perm);

[[nodiscard]] BitVector random_vector(RandomSource& rng, std::size_t dim);
// Uniform over vectors of exactly `w` set coordinates (partial Fisher-Yates).
[[nodiscard]] BitVector random_weight_vector(RandomSource& rng, std::size_t dim,
                                             std::size_t w);

}  // namespace cpair

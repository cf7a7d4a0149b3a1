#include "cpair/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cpair/kernels.hpp"

namespace cpair {

namespace {

void require_same_dim(const BitVector& v, const BitVector& w) {
  if (v.dim() != w.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(v.dim()) + " vs " +
                                std::to_string(w.dim()));
  }
}

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > BitVector::kMaxDim) {
    throw std::invalid_argument("vector dimension out of range: " + std::to_string(dim));
  }
}

}  // namespace

BitVector::BitVector(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  words_.assign(words_for(dim), 0);
}

BitVector BitVector::from_words(std::size_t dim, std::vector<std::uint64_t> words) {
  check_dim(dim);
  if (words.size() != words_for(dim)) {
    throw std::invalid_argument("word count does not match dimension");
  }
  if ((words.back() & ~tail_mask(dim)) != 0) {
    throw std::invalid_argument("nonzero padding bits");
  }
  return BitVector(dim, std::move(words));
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] != '0' && bits[j] != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    v.set(j, bits[j] == '1');
  }
  return v;
}

BitVector BitVector::ones(std::size_t dim) {
  BitVector v(dim);
  std::fill(v.words_.begin(), v.words_.end(), ~std::uint64_t{0});
  v.words_.back() &= tail_mask(dim);
  return v;
}

bool BitVector::is_canonical() const noexcept {
  return words_.size() == words_for(dim_) && (words_.back() & ~tail_mask(dim_)) == 0;
}

std::string BitVector::to_string() const {
  std::string out(dim_, '0');
  for (std::size_t j = 0; j < dim_; ++j) {
    if (get(j)) out[j] = '1';
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t weight(const BitVector& v) noexcept {
  std::size_t total = 0;
  for (std::uint64_t word : v.words()) total += static_cast<std::size_t>(std::popcount(word));
  return total;
}

BitVector operator^(const BitVector& v, const BitVector& w) {
  BitVector out = v;
  out ^= w;
  return out;
}

std::size_t distance(const BitVector& v, const BitVector& w) {
  require_same_dim(v, w);
  return row_distance(v.words().data(), w.words().data(), v.word_count());
}

BitVector complement(const BitVector& v) { return v ^ BitVector::ones(v.dim()); }

BlockSpec::BlockSpec(std::size_t dim, std::size_t blocks) : dim_(dim), blocks_(blocks) {
  if (dim == 0 || blocks == 0 || blocks > dim) {
    throw std::invalid_argument("block count must satisfy 1 <= r <= d");
  }
  width_ = dim / blocks;
}

std::size_t BlockSpec::first(std::size_t block) const {
  if (block == 0 || block > blocks_) {
    throw std::out_of_range("block index " + std::to_string(block) + " outside [1, " +
                            std::to_string(blocks_) + "]");
  }
  return (block - 1) * width_;
}

std::size_t BlockSpec::width(std::size_t block) const {
  const std::size_t start = first(block);
  return block == blocks_ ? dim_ - start : width_;
}

BitVector block_projection(const BitVector& v, const BlockSpec& spec, std::size_t block) {
  if (v.dim() != spec.dim()) throw std::invalid_argument("vector and block spec disagree on d");
  const std::size_t start = spec.first(block);
  BitVector out(spec.width(block));
  for (std::size_t j = 0; j < out.dim(); ++j) out.set(j, v.get(start + j));
  return out;
}

BlockWindow make_window(const BlockSpec& spec, std::size_t block) {
  const std::size_t start = spec.first(block);
  const std::size_t end = start + spec.width(block);  // exclusive
  BlockWindow win;
  win.first_word = start / BitVector::kWordBits;
  win.last_word = (end - 1) / BitVector::kWordBits;
  win.first_mask = ~std::uint64_t{0} << (start % BitVector::kWordBits);
  win.last_mask = tail_mask(end);
  return win;
}

std::vector<std::uint64_t> align_block(const BitVector& z, const BlockSpec& spec,
                                       std::size_t block) {
  if (z.dim() != spec.width(block)) {
    throw std::invalid_argument("bucket vector width does not match block width");
  }
  const std::size_t start = spec.first(block);
  const std::size_t shift = start % BitVector::kWordBits;
  const std::size_t base = start / BitVector::kWordBits;
  std::vector<std::uint64_t> aligned(BitVector::words_for(spec.dim()), 0);
  const auto local = z.words();
  for (std::size_t w = 0; w < local.size(); ++w) {
    aligned[base + w] |= local[w] << shift;
    if (shift != 0 && base + w + 1 < aligned.size()) {
      aligned[base + w + 1] |= local[w] >> (BitVector::kWordBits - shift);
    }
  }
  return aligned;
}

std::size_t block_weight(const BitVector& v, const BitVector& z, const BlockSpec& spec,
                         std::size_t block) {
  if (v.dim() != spec.dim()) throw std::invalid_argument("vector and block spec disagree on d");
  const auto aligned = align_block(z, spec, block);
  return window_weight(v.words().data(), aligned.data(), make_window(spec, block));
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t target : images_) {
    if (target >= images_.size() || seen[target]) {
      throw std::invalid_argument("permutation images must be a bijection on [0, d)");
    }
    seen[target] = true;
  }
}

Permutation Permutation::identity(std::size_t dim) {
  std::vector<std::uint32_t> images(dim);
  std::iota(images.begin(), images.end(), 0U);
  return Permutation(std::move(images));
}

Permutation Permutation::random(std::size_t dim, RandomSource& rng) {
  std::vector<std::uint32_t> images(dim);
  std::iota(images.begin(), images.end(), 0U);
  for (std::size_t j = dim; j > 1; --j) {
    std::swap(images[j - 1], images[rng.uniform_below(j)]);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    inv[images_[j]] = static_cast<std::uint32_t>(j);
  }
  return Permutation(std::move(inv));
}

BitVector apply_permutation(const BitVector& v, const Permutation& perm) {
  if (v.dim() != perm.dim()) throw std::invalid_argument("permutation dimension mismatch");
  BitVector out(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    if (v.get(j)) out.set(perm.image(j), true);
  }
  return out;
}

BitVector random_vector(RandomSource& rng, std::size_t dim) {
  std::vector<std::uint64_t> words(BitVector::words_for(dim));
  for (auto& word : words) word = rng.next();
  if (!words.empty()) words.back() &= tail_mask(dim);
  return BitVector::from_words(dim, std::move(words));
}

BitVector random_weight_vector(RandomSource& rng, std::size_t dim, std::size_t w) {
  if (w > dim) {
    throw std::invalid_argument("weight " + std::to_string(w) + " exceeds dimension " +
                                std::to_string(dim));
  }
  BitVector out(dim);
  // Partial Fisher-Yates over [0, dim): step t swaps slot t with a uniform
  // slot in [t, dim) and selects the value landing at t. Large dims keep only
  // the displaced slots in a map.
  constexpr std::size_t kDenseLimit = 4096;
  if (dim <= kDenseLimit) {
    std::vector<std::uint32_t> slots(dim);
    std::iota(slots.begin(), slots.end(), 0U);
    for (std::size_t t = 0; t < w; ++t) {
      const std::size_t pick = t + rng.uniform_below(dim - t);
      std::swap(slots[t], slots[pick]);
      out.set(slots[t], true);
    }
    return out;
  }
  std::unordered_map<std::size_t, std::size_t> displaced;
  auto slot = [&](std::size_t i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t pick = t + rng.uniform_below(dim - t);
    const std::size_t chosen = slot(pick);
    displaced[pick] = slot(t);
    out.set(chosen, true);
  }
  return out;
}

}  // namespace cpair

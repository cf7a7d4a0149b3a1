#include "cpair/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "cpair/kernels.hpp"

namespace cpair {

namespace {

std::vector<std::uint64_t> pack_rows(const std::vector<BitVector>& vectors, std::size_t words) {
  std::vector<std::uint64_t> rows;
  rows.reserve(vectors.size() * words);
  for (const auto& v : vectors) {
    if (v.word_count() != words) throw std::invalid_argument("vectors of mixed dimension");
    rows.insert(rows.end(), v.words().begin(), v.words().end());
  }
  return rows;
}

std::uint64_t pair_key(std::size_t i, std::size_t j) noexcept {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

// Fills the words of `win` with uniform bits: the masked view of a uniform
// block-local z.
void draw_bucket(RandomSource& rng, std::uint64_t* aligned, const BlockWindow& win) noexcept {
  for (std::size_t w = win.first_word; w <= win.last_word; ++w) aligned[w] = rng.next();
}

class Search {
 public:
  Search(const Instance& inst, const SolverParams& params, RandomSource& rng)
      : inst_(inst), params_(params), rng_(rng), spec_(inst.d, params.depth) {
    for (std::size_t block = 1; block <= params.depth; ++block) {
      windows_.push_back(make_window(spec_, block));
      delta_counts_.push_back(delta_count_for(params.delta, spec_.width(block)));
    }
    buckets_.assign(params.depth, std::vector<std::uint64_t>(BitVector::words_for(inst.d), 0));
  }

  void run_round(PackedList a, PackedList b) {
    a_ = std::move(a);
    b_ = std::move(b);
    descend(0, 0, a_->size(), 0, b_->size());
  }

  [[nodiscard]] bool done() const noexcept { return done_; }
  [[nodiscard]] bool any_found() const noexcept { return !found_.empty(); }

  void finish(SolveReport& report) {
    report.nodes_visited = nodes_;
    report.naive_comparisons = comparisons_;
    for (const auto& [i, j] : found_) {
      // Final check against the untouched input lists.
      const std::size_t dist = distance(inst_.list1[i], inst_.list2[j]);
      if (dist == inst_.gamma_count) report.matches.push_back({i, j, dist});
    }
    std::sort(report.matches.begin(), report.matches.end());
  }

 private:
  void descend(std::size_t level, std::size_t a_begin, std::size_t a_end, std::size_t b_begin,
               std::size_t b_end) {
    ++nodes_;
    const std::size_t a_size = a_end - a_begin;
    const std::size_t b_size = b_end - b_begin;
    if (level == params_.depth || std::min(a_size, b_size) <= params_.naive_threshold) {
      leaf(a_begin, a_size, b_begin, b_size);
      return;
    }
    const BlockWindow& win = windows_[level];
    std::uint64_t* z = buckets_[level].data();
    for (std::uint64_t t = 0; t < params_.branching && !done_; ++t) {
      draw_bucket(rng_, z, win);
      const std::size_t a_mid =
          a_->partition(a_begin, a_end, z, win, delta_counts_[level], params_.strategy);
      if (a_mid == a_begin) continue;
      const std::size_t b_mid =
          b_->partition(b_begin, b_end, z, win, delta_counts_[level], params_.strategy);
      if (b_mid == b_begin) continue;
      descend(level + 1, a_begin, a_mid, b_begin, b_mid);
    }
  }

  void leaf(std::size_t a_begin, std::size_t a_size, std::size_t b_begin, std::size_t b_size) {
    comparisons_ += static_cast<std::uint64_t>(a_size) * b_size;
    scan_pairs(a_->row(a_begin), a_size, b_->row(b_begin), b_size, a_->words_per_row(),
               inst_.gamma_count, [&](std::size_t a, std::size_t b) {
                 const std::size_t i = a_->origin(a_begin + a);
                 const std::size_t j = b_->origin(b_begin + b);
                 if (seen_.insert(pair_key(i, j)).second) found_.emplace_back(i, j);
                 if (params_.stop_on_first &&
                     (!inst_.planted || (inst_.planted->i == i && inst_.planted->j == j))) {
                   done_ = true;
                   return false;
                 }
                 return true;
               });
  }

  const Instance& inst_;
  const SolverParams& params_;
  RandomSource& rng_;
  BlockSpec spec_;
  std::vector<BlockWindow> windows_;
  std::vector<std::size_t> delta_counts_;
  std::vector<std::vector<std::uint64_t>> buckets_;
  std::optional<PackedList> a_;
  std::optional<PackedList> b_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<std::pair<std::size_t, std::size_t>> found_;
  std::uint64_t nodes_ = 0;
  std::uint64_t comparisons_ = 0;
  bool done_ = false;
};

}  // namespace

PackedList::PackedList(const std::vector<BitVector>& vectors)
    : words_(vectors.empty() ? 0 : vectors.front().word_count()),
      rows_(pack_rows(vectors, words_)),
      origin_(vectors.size()) {
  if (vectors.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("list too long for 32-bit row tags");
  }
  for (std::size_t t = 0; t < origin_.size(); ++t) origin_[t] = static_cast<std::uint32_t>(t);
}

PackedList::PackedList(const std::vector<BitVector>& vectors, const Permutation& perm)
    : PackedList(vectors) {
  for (std::size_t t = 0; t < vectors.size(); ++t) {
    const BitVector moved = apply_permutation(vectors[t], perm);
    std::copy(moved.words().begin(), moved.words().end(), rows_.begin() + t * words_);
  }
}

void PackedList::swap_rows(std::size_t a, std::size_t b) noexcept {
  std::swap_ranges(rows_.begin() + a * words_, rows_.begin() + (a + 1) * words_,
                   rows_.begin() + b * words_);
  std::swap(origin_[a], origin_[b]);
}

std::size_t PackedList::partition(std::size_t begin, std::size_t end,
                                  const std::uint64_t* aligned_z, const BlockWindow& win,
                                  std::size_t delta_count, Strategy strategy) noexcept {
  // Accepted rows are rare, so swap only those forward.
  std::size_t out = begin;
  for (std::size_t t = begin; t < end; ++t) {
    if (bucket_accept(window_weight(row(t), aligned_z, win), delta_count, strategy)) {
      if (t != out) swap_rows(t, out);
      ++out;
    }
  }
  return out;
}

std::vector<MatchPair> naive_search(const Instance& inst, std::size_t gamma_count) {
  std::vector<MatchPair> out;
  if (inst.list1.empty() || inst.list2.empty()) return out;
  const std::size_t words = inst.list1.front().word_count();
  const auto a = pack_rows(inst.list1, words);
  const auto b = pack_rows(inst.list2, words);
  scan_pairs(a.data(), inst.list1.size(), b.data(), inst.list2.size(), words, gamma_count,
             [&](std::size_t i, std::size_t j) {
               out.push_back({i, j, gamma_count});
               return true;
             });
  return out;
}

std::size_t partition_in_place(PackedList& list, std::size_t begin, std::size_t end,
                               const BitVector& z, const BlockSpec& spec, std::size_t block,
                               std::size_t delta_count, Strategy strategy) {
  if (begin > end || end > list.size()) throw std::out_of_range("partition range out of bounds");
  if (BitVector::words_for(spec.dim()) != list.words_per_row()) {
    throw std::invalid_argument("block spec does not match row width");
  }
  const auto aligned = align_block(z, spec, block);
  return list.partition(begin, end, aligned.data(), make_window(spec, block), delta_count,
                        strategy);
}

SolveReport solve(const Instance& inst, const SolverParams& params, RandomSource& rng) {
  params.validate();
  if (params.depth > inst.d) throw std::invalid_argument("depth exceeds dimension");
  if (inst.list1.size() != inst.n || inst.list2.size() != inst.n) {
    throw std::invalid_argument("instance lists do not match n");
  }
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  Search search(inst, params, rng);
  for (std::size_t round = 0; round < params.permutations; ++round) {
    if (round == 0) {
      search.run_round(PackedList(inst.list1), PackedList(inst.list2));
    } else {
      const Permutation perm = Permutation::random(inst.d, rng);
      search.run_round(PackedList(inst.list1, perm), PackedList(inst.list2, perm));
    }
    if (search.done()) break;
    // Without planted metadata a round with any match is as good as it gets.
    if (params.stop_on_first && !inst.planted && search.any_found()) break;
  }
  search.finish(report);
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  if (inst.planted) {
    report.planted_found = std::any_of(
        report.matches.begin(), report.matches.end(),
        [&](const MatchPair& m) { return m.i == inst.planted->i && m.j == inst.planted->j; });
  }
  return report;
}

double survival_rate_probe(const Instance& inst, const SolverParams& params, RandomSource& rng,
                           std::size_t trials) {
  if (!inst.planted) throw std::invalid_argument("survival probe needs a planted pair");
  if (trials == 0) throw std::invalid_argument("survival probe needs at least one trial");
  params.validate();
  const BlockSpec spec(inst.d, params.depth);
  const BlockWindow win = make_window(spec, 1);
  const std::size_t delta_count = delta_count_for(params.delta, spec.width(1));
  const auto x = inst.list1[inst.planted->i].words();
  const auto y = inst.list2[inst.planted->j].words();
  std::vector<std::uint64_t> z(x.size(), 0);
  std::size_t kept = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    draw_bucket(rng, z.data(), win);
    if (window_weight(x.data(), z.data(), win) == delta_count &&
        window_weight(y.data(), z.data(), win) == delta_count) {
      ++kept;
    }
  }
  return static_cast<double>(kept) / static_cast<double>(trials);
}

}  // namespace cpair

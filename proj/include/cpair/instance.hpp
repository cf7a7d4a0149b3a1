#pragma once

// Planted closest-pair instances, their generators and the text file format.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpair/bit_vector.hpp"
#include "cpair/distribution.hpp"
#include "cpair/random.hpp"

namespace cpair {

struct PlantedPair {
  std::size_t i = 0;  // index into list1
  std::size_t j = 0;  // index into list2

  friend bool operator==(const PlantedPair&, const PlantedPair&) = default;
};

struct Instance {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t gamma_count = 0;
  std::vector<BitVector> list1;
  std::vector<BitVector> list2;
  std::optional<PlantedPair> planted;
  DistributionModel model;
  std::uint64_t seed = 0;

  // log2(n) / d
  [[nodiscard]] double lambda() const noexcept;
  [[nodiscard]] double gamma() const noexcept;
  // Throws std::invalid_argument if any structural invariant fails.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// One vector drawn from `model`.
[[nodiscard]] BitVector sample_from_model(RandomSource& rng, std::size_t d,
                                          const DistributionModel& model);

[[nodiscard]] Instance gen_instance(std::size_t d, std::size_t n, std::size_t gamma_count,
                                    const DistributionModel& model, std::uint64_t seed);

class InstanceParseError : public std::runtime_error {
 public:
  enum class Kind { MalformedHeader, WrongCount, BadHex, PaddingViolation, Inconsistent };

  InstanceParseError(Kind kind, std::size_t line, const std::string& detail);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// ceil(d/4) lowercase hex digits; digit t holds coordinates 4t..4t+3 with
// coordinate 4t in the digit's lowest bit.
[[nodiscard]] std::string encode_hex(const BitVector& v);
// Throws InstanceParseError (line 0) on bad digits, length or padding.
[[nodiscard]] BitVector decode_hex(std::string_view hex, std::size_t d);

void write_instance(const Instance& inst, std::ostream& out);
[[nodiscard]] Instance read_instance(std::istream& in);

void save_instance(const Instance& inst, const std::filesystem::path& path);
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);

}  // namespace cpair

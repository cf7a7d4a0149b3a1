#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/instance.hpp"
#include "cpair/text.hpp"

namespace cpair {

namespace {

using Kind = InstanceParseError::Kind;

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::MalformedHeader:
      return "malformed header";
    case Kind::WrongCount:
      return "wrong vector count";
    case Kind::BadHex:
      return "bad hex payload";
    case Kind::PaddingViolation:
      return "nonzero padding bits";
    case Kind::Inconsistent:
      return "inconsistent instance";
  }
  return "parse error";
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto end = line.find(' ', start);
    const auto stop = end == std::string_view::npos ? line.size() : end;
    parts.push_back(line.substr(start, stop - start));
    start = stop + 1;
  }
  return parts;
}

// Value of `key=...` or nullopt when the key does not match.
std::optional<std::string_view> field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || !token.starts_with(key) || token[key.size()] != '=') {
    return std::nullopt;
  }
  return token.substr(key.size() + 1);
}

struct Header {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t gamma_count = 0;
  std::optional<PlantedPair> planted;
  DistributionModel model;
  std::uint64_t seed = 0;
};

Header parse_header(std::string_view line) {
  auto fail = [](const std::string& why) -> InstanceParseError {
    return {Kind::MalformedHeader, 1, why};
  };
  const auto parts = split_spaces(line);
  if (parts.size() != 8 || parts[0] != "CPINST" || parts[1] != "1") {
    throw fail("expected 'CPINST 1' followed by six fields");
  }
  auto number = [&](std::size_t index, std::string_view key) {
    const auto value = field(parts[index], key);
    if (!value) throw fail("expected field '" + std::string(key) + "'");
    const auto parsed = text::parse_u64(*value);
    if (!parsed) throw fail("field '" + std::string(key) + "' is not an unsigned integer");
    return *parsed;
  };
  Header h;
  h.d = number(2, "d");
  h.n = number(3, "n");
  h.gamma_count = number(4, "gamma");
  if (h.d < 1 || h.d > BitVector::kMaxDim) throw fail("d out of range");
  if (h.n < 1) throw fail("n must be at least 1");
  if (h.gamma_count > h.d) throw fail("gamma exceeds d");

  const auto planted = field(parts[5], "planted");
  if (!planted) throw fail("expected field 'planted'");
  if (*planted != "none") {
    const auto comma = planted->find(',');
    const auto i = comma == std::string_view::npos ? std::nullopt
                                                   : text::parse_u64(planted->substr(0, comma));
    const auto j = comma == std::string_view::npos ? std::nullopt
                                                   : text::parse_u64(planted->substr(comma + 1));
    if (!i || !j) throw fail("planted must be '<i>,<j>' or 'none'");
    if (*i >= h.n || *j >= h.n) throw fail("planted index out of range");
    h.planted = PlantedPair{*i, *j};
  }

  const auto model = field(parts[6], "model");
  if (!model) throw fail("expected field 'model'");
  try {
    h.model = DistributionModel::parse(*model);
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  h.seed = number(7, "seed");
  return h;
}

BitVector decode_row(std::string_view hex, std::size_t d, std::size_t line) {
  const std::size_t digits = (d + 3) / 4;
  if (hex.size() != digits) {
    throw InstanceParseError(Kind::BadHex, line,
                             "expected " + std::to_string(digits) + " hex digits, got " +
                                 std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(BitVector::words_for(d), 0);
  for (std::size_t t = 0; t < digits; ++t) {
    const int value = hex_value(hex[t]);
    if (value < 0) {
      throw InstanceParseError(Kind::BadHex, line, "invalid hex digit at column " + std::to_string(t + 1));
    }
    words[t / 16] |= static_cast<std::uint64_t>(value) << (4 * (t % 16));
  }
  if ((words.back() & ~tail_mask(d)) != 0) {
    throw InstanceParseError(Kind::PaddingViolation, line, "bits beyond coordinate d are set");
  }
  return BitVector::from_words(d, std::move(words));
}

}  // namespace

InstanceParseError::InstanceParseError(Kind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind_name(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

std::string encode_hex(const BitVector& v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (v.dim() + 3) / 4;
  const auto words = v.words();
  std::string out(digits, '0');
  for (std::size_t t = 0; t < digits; ++t) {
    out[t] = kDigits[(words[t / 16] >> (4 * (t % 16))) & 0xFU];
  }
  return out;
}

BitVector decode_hex(std::string_view hex, std::size_t d) {
  if (d < 1 || d > BitVector::kMaxDim) throw std::invalid_argument("dimension out of range");
  return decode_row(hex, d, 0);
}

void write_instance(const Instance& inst, std::ostream& out) {
  out << "CPINST 1 d=" << inst.d << " n=" << inst.n << " gamma=" << inst.gamma_count
      << " planted=";
  if (inst.planted) {
    out << inst.planted->i << ',' << inst.planted->j;
  } else {
    out << "none";
  }
  out << " model=" << inst.model.label() << " seed=" << inst.seed << '\n';
  for (const auto& v : inst.list1) out << encode_hex(v) << '\n';
  out << '\n';
  for (const auto& v : inst.list2) out << encode_hex(v) << '\n';
}

Instance read_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InstanceParseError(Kind::MalformedHeader, 1, "empty input");
  const Header h = parse_header(line);

  Instance inst;
  inst.d = h.d;
  inst.n = h.n;
  inst.gamma_count = h.gamma_count;
  inst.planted = h.planted;
  inst.model = h.model;
  inst.seed = h.seed;
  inst.list1.reserve(h.n);
  inst.list2.reserve(h.n);

  std::size_t line_no = 1;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) {
      throw InstanceParseError(Kind::WrongCount, line_no + 1,
                               std::string("input ended while reading ") + what);
    }
    ++line_no;
  };
  for (std::size_t t = 0; t < h.n; ++t) {
    next_line("list 1");
    if (line.empty()) {
      throw InstanceParseError(Kind::WrongCount, line_no,
                               "list 1 has " + std::to_string(t) + " vectors, header says " +
                                   std::to_string(h.n));
    }
    inst.list1.push_back(decode_row(line, h.d, line_no));
  }
  next_line("the list separator");
  if (!line.empty()) {
    throw InstanceParseError(Kind::WrongCount, line_no, "expected a blank line after list 1");
  }
  for (std::size_t t = 0; t < h.n; ++t) {
    next_line("list 2");
    if (line.empty()) {
      throw InstanceParseError(Kind::WrongCount, line_no,
                               "list 2 has " + std::to_string(t) + " vectors, header says " +
                                   std::to_string(h.n));
    }
    inst.list2.push_back(decode_row(line, h.d, line_no));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw InstanceParseError(Kind::WrongCount, line_no, "trailing data");
  }
  if (inst.planted &&
      distance(inst.list1[inst.planted->i], inst.list2[inst.planted->j]) != inst.gamma_count) {
    throw InstanceParseError(Kind::Inconsistent, 1, "planted pair is not at distance gamma");
  }
  return inst;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_instance(inst, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_instance(in);
}

}  // namespace cpair

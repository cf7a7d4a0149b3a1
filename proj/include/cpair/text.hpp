#pragma once

// Locale-independent number <-> text helpers built on <charconv>.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cpair::text {

[[nodiscard]] std::optional<std::uint64_t> parse_u64(std::string_view s) noexcept;
[[nodiscard]] std::optional<double> parse_double(std::string_view s) noexcept;

// Shortest representation that parses back to the same double.
[[nodiscard]] std::string format_double(double value);

}  // namespace cpair::text

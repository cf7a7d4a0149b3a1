#pragma once

#include <iosfwd>

namespace cpair {

// Entry point of the `cpair` tool. Exit codes: 0 success, 1 a verification
// mismatch, 2 bad usage or unusable input.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpair

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace symm::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 1,
  kParse = 2,
  kCap = 3,
  kInvariant = 4,
};

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;

/// 64-bit FNV-1a, continuing from `h`.
std::uint64_t fnv1a(std::string_view data, std::uint64_t h = kFnvOffset);

/// Entry point of the `symm` tool. Writes the run report as JSON to `out`
/// (or to --output) and diagnostics to `err`; returns the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symm::cli

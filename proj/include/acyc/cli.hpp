#pragma once

// Command-line front end.  Exit codes: 0 success or sufficient, 1 input
// error, 2 internal error, 3 obstructed, 4 indeterminate.

#include <filesystem>
#include <iosfwd>
#include <string>

namespace acyc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitObstructed = 3;
inline constexpr int kExitIndeterminate = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// ACYC_FIXTURES when set, otherwise the corpus compiled into the binary.
std::filesystem::path fixtures_dir();

/// Lowercase hex SHA-256 of the file contents.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace acyc

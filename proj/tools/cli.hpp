#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace penta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// "8" -> {8, 8}; "5..10" -> {5, 10}. Throws UsageError on malformed or
/// empty ranges.
std::pair<int, int> parse_range(const std::string& text);

/// Runs one command line (without the program name). Input graphs are read
/// from the positional file argument or from `in`.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace penta::cli

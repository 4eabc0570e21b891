#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a2::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsage = 2;

// Runs one command line (without the program name) and returns the exit
// code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a2::cli

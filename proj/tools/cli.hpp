#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blindsc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // rejected signature, tag mismatch, bad input file
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Files named "-"
/// are read from or written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blindsc::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcodes::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsageError = 1, kDomainError = 2 };

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcodes::cli

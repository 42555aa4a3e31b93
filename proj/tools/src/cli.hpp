#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssblow::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kNumeric = 3 };

/// Runs the tool on argv[1..]; reports go to `out`, error JSON to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssblow::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

/// Exit codes of the command-line front end.
enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kPrecision = 3 };

/// Runs the front end on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory searched for golden fixtures: $MZV_FIXTURE_DIR, else the built-in default.
std::string fixture_dir();

} // namespace mzv::cli

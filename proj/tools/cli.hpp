#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertri::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypertri::cli

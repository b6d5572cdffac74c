#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blocklie::cli {

inline constexpr int kReportSchema = 1;

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports are
/// JSON lines on `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blocklie::cli

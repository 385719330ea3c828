#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hyperlog/checks.hpp"

namespace hyperlog {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitBracket = 3,
  kExitUnwritable = 4,
};

/// Reads key = value lines into opts. '#' starts a comment and [section]
/// lines are ignored. Keys: c d a b p grid_n tol x_lo x_hi s_lo s_hi
/// (dashes accepted for underscores). Throws UsageError on an unknown key or
/// a malformed value.
void read_config(std::istream& in, CheckOptions& opts);

/// Runs the tool with args (without the program name). JSON goes to out,
/// diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hyperlog

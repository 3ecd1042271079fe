#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balforest::tools {

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kBoundViolation = 2,
  kOracleRefusal = 3,
};

/// Parses and runs one command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balforest::tools

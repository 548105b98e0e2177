#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metenum {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitMismatch = 4,
};

// Runs one CLI invocation; args[0] is the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metenum

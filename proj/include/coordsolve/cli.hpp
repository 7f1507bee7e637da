#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coordsolve {

// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // usage, parse and argument errors
  kExitPrecondition = 2,
  kExitResource = 3,
  kExitInternal = 4,
};

// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coordsolve

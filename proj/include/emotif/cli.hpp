#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace emotif {

// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInputError = 1,     // parse, alignment, schema or usage errors
  kExitIoError = 2,        // unreadable / unwritable files
  kExitSynthError = 3,     // external espeak / mbrola failures
  kExitThresholdFailed = 4,
};

// Runs the `emotif` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emotif

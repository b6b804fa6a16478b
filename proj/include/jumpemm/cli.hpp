#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jumpemm {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // validation or diagnostic failure
  kExitIo = 2,      // unreadable/ill-formed config, bad flags, write errors
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Reports go to `out`, errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpemm

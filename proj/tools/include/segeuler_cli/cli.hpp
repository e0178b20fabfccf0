#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segeuler::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,  ///< failed verdict or domain error
  kUsage = 2,
  kResource = 3,        ///< resource limit or internal failure
};

/// Runs the command line `args` (program name first) writing to out and err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segeuler::cli

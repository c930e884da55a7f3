#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commprob::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`; failures print one JSON line {"error": kind, "message": ...} to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commprob::cli

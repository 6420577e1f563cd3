#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbirr::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kParseError = 2,
  kValidationError = 3,
  kSearchFailure = 4,
  kCheckFailure = 5,
};

/// Entry point behind the `orbirr` binary; args[0] is the program name.
/// Subcommands: chi | hilbert | search | check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbirr::cli

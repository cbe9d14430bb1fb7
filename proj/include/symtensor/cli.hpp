#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symtensor::cli {

/// Exit codes. Verdicts are reported in the JSON payload, never here.
enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kSizeLimit = 3,
  kInternalError = 4,
};

/// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtensor::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perclab::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kCapExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perclab::cli

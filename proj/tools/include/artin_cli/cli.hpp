#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin::cli {

enum ExitCode : int { kOk = 0, kMathError = 1, kInputError = 2 };

/// Runs one command line (without the program name). Results go to out,
/// errors to err as JSON; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli

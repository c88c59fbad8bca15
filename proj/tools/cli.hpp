#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conforma::cli {

enum ExitCode { kOk = 0, kUserError = 2, kNumericFailure = 3 };

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace conforma::cli

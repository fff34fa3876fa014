#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace finkin::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kInputError = 2,
    kInfeasible = 3,
    kIoError = 4,
};

/// Entry point behind the `finkin` binary. `args` excludes the program name.
/// Results go to --out or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finkin::cli

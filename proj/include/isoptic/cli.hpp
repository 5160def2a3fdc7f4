#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isoptic::cli {

/// Exit codes of isoptic-lab.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs one isoptic-lab invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace isoptic::cli

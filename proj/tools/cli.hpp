#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kbinom::cli {

enum ExitCode : int {
    kEquivalent = 0,
    kNotEquivalent = 1,
    kUsageError = 2,
    kSamplingFailure = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and the echoed configuration of text-mode runs to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kbinom::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linapprox::cli {

/// Exit codes.
enum Exit : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParse = 2,
    kPrecision = 3,
    kDomain = 4,
};

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace linapprox::cli

#pragma once

#include <iosfwd>

namespace dentedhex {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailed = 1,    // verify found a failing property, ratio identity failed
    kExitUsage = 2,     // malformed flags, lists or region specs
    kExitTooLarge = 3,  // an enumeration bound was exceeded
    kExitMismatch = 4,  // two computation routes disagreed
};

/// Entry point of the dentedhex command line; writes to out/err instead of
/// the process streams so it can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dentedhex

#pragma once

#include <ostream>

namespace polykernel::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitParse = 2,
    kExitNumerical = 3,
    kExitIo = 4,
};

/// Entry point of the polykernel tool. Output that is not sent to --out goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace polykernel::cli

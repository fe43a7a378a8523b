#pragma once

#include <iosfwd>

namespace bjsm::tools {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_mismatch = 2,
    exit_io = 3,
};

/// Entry point of the `bjsm` command. Subcommands: build, query, verify,
/// gen, bench. BJSM_CHECKED=1 in the environment selects the checked engine.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bjsm::tools

#pragma once

#include <iosfwd>

namespace dunkl::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
};

/// Entry point of the dunkl_osc tool. Subcommands: spectrum, wavefunction,
/// coherent, verify. Artifacts go to `out` (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli

#pragma once

#include <ostream>

namespace aspectra {

/// Entry point of the command-line tool. Subcommands: rho, family,
/// enumerate, verify, rank. Returns 0 on success, 1 when a verification
/// suite reports a violation, 2 on usage errors, 3 on numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aspectra

#pragma once

#include <iosfwd>

namespace coinc {

/// Runs the command-line interface. Exit codes: 0 success, 1 internal
/// failure, 2 invalid input, 3 cap exceeded, 4 boundary/collision/general
/// position diagnostics.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coinc

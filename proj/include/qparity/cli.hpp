#pragma once

#include <ostream>

namespace qparity::cli {

/// Parses and executes one command line. Writes the report to `out` (and to
/// --out PATH when given), diagnostics to `err`. Returns the process exit
/// status: 0 pass, 1 verification failure or non-convergence, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace qparity::cli

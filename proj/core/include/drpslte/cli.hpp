#pragma once

#include <ostream>

namespace drpslte {

// Parses argv and dispatches one subcommand. Data payloads go to `out` (or to
// the file named by -o/--output, written atomically); diagnostics go to `err`.
// Returns the process exit status: 0 success, 1 invalid input or unknown
// query, 2 file-system failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drpslte

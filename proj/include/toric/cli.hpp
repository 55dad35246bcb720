#pragma once

// In-process entry point of the command line tool: takes argv-style
// arguments (without the program name), writes the report to `out` and
// diagnostics to `err`, returns the process exit code.
//
// Exit codes: 0 success; 1 internal inconsistency; 2 malformed input or
// usage; 3 violated data invariant; 4 unmet construction precondition;
// 5 exceeded size cap or search bound.

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric

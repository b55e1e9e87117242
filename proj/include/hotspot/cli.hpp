#pragma once

#include <iosfwd>

namespace hotspot {

// Entry point behind the command-line tool; testable without a process
// boundary. Results go to `out`, diagnostics to `err`. Returns 0 on
// success, 1 on usage errors, 2 on data errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hotspot

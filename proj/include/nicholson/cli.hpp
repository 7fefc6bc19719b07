#pragma once

#include <iosfwd>

namespace nicholson::cli {

/// Runs the command line. Results go to `out`, diagnostics to `err`.
/// Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nicholson::cli

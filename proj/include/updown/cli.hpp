#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace updown {

// Runs the command line interface on the given argument list (without the
// program name) and writes results to `out` and diagnostics to `err`.
// Returns the process exit code: 0 on success, 1 when a verification suite
// reports failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace updown

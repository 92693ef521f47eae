#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slitsqueeze {

/// Runs the command line `args` (args[0] is the program name).  Data goes to
/// `out`, diagnostics to `err`.  Returns 0 on success, 1 on a failed check or
/// convergence failure, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slitsqueeze

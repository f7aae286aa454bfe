#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace springer {

/// Runs the command-line front end on the given arguments (program name not
/// included).  Output goes to out, diagnostics to err.  Returns the process
/// exit code: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setvar::cli {

enum ExitCode : int { ok = 0, usage = 1, bad_input = 2, certificate_failed = 3, not_converged = 4 };

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setvar::cli

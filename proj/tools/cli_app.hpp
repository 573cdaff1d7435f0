#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

/// Runs the `schur` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schur::cli

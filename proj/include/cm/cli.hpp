#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cm {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitInputError = 1, kExitResourceLimit = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cm

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetsat::cli {

enum ExitCode : int { ok = 0, violation = 1, invalid = 2, resource_limit = 3 };

// Runs one subcommand. args excludes the program name. Reports go to out (or
// the --out file), diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetsat::cli

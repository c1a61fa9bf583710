#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facet {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOptimal = 0,
  kExitInfeasible = 1,
  kExitSolverFailure = 2,
  kExitUsage = 3,
};

/// Entry point of the `facetpivot` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facet

#ifndef PSSP_CLI_HPP
#define PSSP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pssp {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInfeasible = 2, kExitUnknown = 3 };

/// Runs one of solve / bench / verify / gen. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pssp

#endif  // PSSP_CLI_HPP

#ifndef ACS_CLI_HPP
#define ACS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace acs {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitExists = 0,
    kExitNotExists = 1,
    kExitUnknown = 2,
    kExitUsage = 64,
};

/// Runs the `acs` command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace acs

#endif

#ifndef ORIENT_CLI_HPP
#define ORIENT_CLI_HPP

#include <iosfwd>

namespace orient {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitBadParameter = 2,
};

/// Entry point of the `orient` tool: subcommands enumerate, count and bench.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace orient

#endif  // ORIENT_CLI_HPP

#ifndef NILALG_CLI_HPP
#define NILALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nilalg {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"check", "--file", "a.json"}. Reports go to `out`, diagnostics and
/// warnings to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilalg

#endif  // NILALG_CLI_HPP

#ifndef DMF_CLI_HPP
#define DMF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dmf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitKb = 3;
inline constexpr int kExitModel = 4;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmf::cli

#endif  // DMF_CLI_HPP

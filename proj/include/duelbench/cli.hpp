#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace duelbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

/// Entry point of the `duelbench` tool. `args` excludes the program name.
/// Subcommands: run, sweep, plot, validate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace duelbench

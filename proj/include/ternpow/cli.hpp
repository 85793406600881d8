#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ternpow::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
	kClean = 0,
	kError = 1,
	kCounterexample = 2,
};

/// Environment variable overriding the default worker count.
inline constexpr const char* kWorkersEnv = "TERNPOW_WORKERS";

/// Entry point of the `ternpow` tool. `args` includes the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ternpow::cli

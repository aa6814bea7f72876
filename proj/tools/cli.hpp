#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bdg::cli {

/// Runs one invocation of the `bdg` tool.  `args` holds the arguments in
/// natural order without the program name; output goes to the given streams.
/// Returns the process exit code: 0 success / cycle / condition holds,
/// 1 witness / condition fails / findings, 2 usage or parse error,
/// 3 only when the engine reports an internal contradiction.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bdg::cli

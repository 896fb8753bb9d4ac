#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mainswitch::cli {

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "MAINSWITCH_WORKERS";

/// Runs one command; args exclude the program name. Returns 0 on success,
/// 1 on a failed verification or an unexpected exception graph, 2 on a
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mainswitch::cli

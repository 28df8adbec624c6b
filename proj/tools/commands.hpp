// Command-line front end: datum | poly | verify | jackson | aomoto | classify | degenerate.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace daha::cli {

// Exit status: 0 when every check passes, 1 on a failed check, 2 on a usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Worker count for shell sums, read from this variable when set.
inline constexpr const char* kWorkersEnv = "DAHA_WORKERS";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace daha::cli

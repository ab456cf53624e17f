#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eireg::cli {

// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eireg::cli

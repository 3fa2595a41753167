#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2swc::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// Runs one invocation; args exclude the program name. JSON goes to `out`,
// errors to `err` as {"error", "detail"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2swc::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omega::cli {

/// Exit codes: 0 success, 1 computation or input error, 2 precondition
/// violation, 64 usage error.
enum ExitCode : int { ok = 0, failure = 1, precondition = 2, usage = 64 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::cli

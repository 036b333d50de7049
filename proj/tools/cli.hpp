#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatknot::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kPrecondition = 2, kBudget = 3 };

/// Runs one command line (args excludes the program name). Results go to
/// `out`, the resolved configuration and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatknot::cli

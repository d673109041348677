#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgs::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgs::cli

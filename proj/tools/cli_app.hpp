#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decogas::cli {

/// Runs the command-line tool on the given arguments (program name excluded).
/// Exit codes: 0 success, 1 usage or validation error, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decogas::cli

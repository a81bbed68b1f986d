#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sakhr::cli {

// Runs one CLI invocation (args excludes the program name) and returns the
// process exit code. All report output goes to `out`, logs and errors to
// `err`; the function owns no global state, so repeated calls are
// independent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sakhr::cli

#ifndef LGIH_TOOLS_CLI_HPP
#define LGIH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lgih::cli {

enum ExitCode : int { ok = 0, user_error = 1, internal_error = 2 };

/// Runs one invocation. args excludes the program name. A single JSON
/// document followed by a newline goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgih::cli

#endif  // LGIH_TOOLS_CLI_HPP

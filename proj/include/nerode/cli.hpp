#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nerode {

/// Runs the command-line tool on the given arguments (program name
/// excluded), writing reports to `out` and diagnostics to `err`. Returns the
/// process exit status: 0 for success (including "member" / "equivalent"
/// verdicts), 1 for a negative query verdict ("non-member",
/// "inequivalent"), 2 for usage, parse, or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nerode

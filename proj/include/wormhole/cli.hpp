#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wormhole::cli {

// Runs one subcommand. JSON results go to `out`, error objects to `err`.
// Exit codes: 0 success, 1 invalid input, 2 invariant or finding failure.
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace wormhole::cli

#ifndef PROPELLER_CLI_HPP
#define PROPELLER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace propeller {

/// Runs one CLI invocation. `args` is argv without the program name.
/// Machine-readable JSON goes to `out`, human summaries and errors to `err`.
/// Exit codes: 0 member/success, 1 non-member, 2 error, 3 budget cap.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace propeller

#endif

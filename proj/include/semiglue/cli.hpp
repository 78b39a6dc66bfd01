#ifndef SEMIGLUE_CLI_HPP
#define SEMIGLUE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace semiglue {

/// Runs the command line (args excludes the program name). Returns 0 on
/// success, 1 on a domain error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiglue

#endif  // SEMIGLUE_CLI_HPP

// Command-line front end. Exposed as a library call so the binary stays a
// thin wrapper and tests can drive it in-process.

#ifndef DBCOVER_CLI_HPP
#define DBCOVER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dbcover::cli {

// Exit codes: 0 success, 1 failed check, 2 usage error, 3 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dbcover::cli

#endif  // DBCOVER_CLI_HPP

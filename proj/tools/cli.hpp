#ifndef PRECAT_CLI_HPP
#define PRECAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace precat::cli {

// Runs one CLI invocation; returns the process exit code.
// 0 = success, 1 = domain error (structured error object on out),
// 2 = input error (bad JSON, syntax error, missing file).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace precat::cli

#endif

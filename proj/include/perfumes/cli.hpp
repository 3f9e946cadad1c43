#ifndef PERFUMES_CLI_HPP
#define PERFUMES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace perfumes::cli {

/// Run the command line given argv-style arguments (program name excluded).
/// Returns 0 on success, 1 on input errors, 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace perfumes::cli

#endif

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace queuelab::cli {

// Runs one CLI invocation. Exit status: 0 success, 1 verification or
// computation failure, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace queuelab::cli

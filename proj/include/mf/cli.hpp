// Command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mf::cli {

/// Runs one invocation. Exit codes: 0 success, 1 usage error, 2 validation
/// failure or invalid input file.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mf::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgraph::cli {

/// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgraph::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsigma::cli {

/// Dispatch a command line (without argv[0]). Returns the process exit
/// code: 0 success, 1 usage or schema error, 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsigma::cli

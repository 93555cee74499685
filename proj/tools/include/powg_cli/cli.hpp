#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powg::cli {

/// Runs the powg command line. args excludes the program name. Returns the
/// process exit code: 0 success, 1 verification failure, 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace powg::cli

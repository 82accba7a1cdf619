#pragma once

#include <iosfwd>

namespace chroma::cli {

// Parses argv, runs the command and returns the process exit status:
// 0 success, 1 bad input, 2 resource limit, 3 invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chroma::cli

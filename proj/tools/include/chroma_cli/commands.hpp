#pragma once

#include <iosfwd>

#include "chroma_cli/config.hpp"

namespace chroma::cli {

// Runs a resolved config. Returns the exit status for commands that report
// failures in their output (verify-lemmas); other failures are thrown.
int dispatch(const Json& cfg, std::ostream& out);

}  // namespace chroma::cli

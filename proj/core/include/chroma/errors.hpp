#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Bad input or configuration. The CLI maps this to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A memory or state budget was exceeded (exit code 2).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A property that must hold by construction failed (exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chroma

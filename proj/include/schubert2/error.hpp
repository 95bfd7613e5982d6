#pragma once

#include <stdexcept>
#include <string>

namespace schubert2 {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition named in an operation's contract was violated by the caller.
struct validation_error : error {
  explicit validation_error(const std::string& what) : error(what) {}
};

// An internal invariant failed; indicates a bug, not bad input.
struct invariant_error : error {
  explicit invariant_error(const std::string& what) : error(what) {}
};

}  // namespace schubert2

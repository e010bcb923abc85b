#pragma once

#include <stdexcept>
#include <string>

namespace ovt {

/// Raised for every domain-level failure: malformed input, unreachable
/// targets, degenerate geometry. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ovt

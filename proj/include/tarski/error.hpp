#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tarski {

/// Malformed input: bad word syntax, out-of-range indices, incompatible
/// universes. `location` names where in the input the problem sits
/// (a character offset for words, a JSON path for documents).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::string location = {})
      : std::invalid_argument(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Thrown when a computation would exceed a declared resource bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tarski

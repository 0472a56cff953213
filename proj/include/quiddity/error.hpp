#pragma once

#include <stdexcept>
#include <string>

namespace quiddity {

/// Raised when an operation is called outside its domain (malformed input,
/// precondition violations, exceeded enumeration bounds).
class Error : public std::invalid_argument {
 public:
  explicit Error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace quiddity

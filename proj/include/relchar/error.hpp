#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relchar {

/// Malformed input: bad group file, invalid ids, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size guard blocked the computation.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_count(partial) {}
  std::size_t partial_count;
};

/// An internal consistency check failed. Always a bug.
class Defect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace relchar

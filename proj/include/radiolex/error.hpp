#ifndef RADIOLEX_ERROR_HPP
#define RADIOLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace radiolex {

/// Violated precondition or invalid input (CLI exit code 1).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable or unwritable file (CLI exit code 2).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radiolex

#endif

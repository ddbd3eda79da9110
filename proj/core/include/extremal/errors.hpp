#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Caller passed arguments outside an operation's documented domain.
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input object violates a structural precondition (wrong family shape, etc.).
class precondition_error : public std::logic_error {
 public:
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

/// Exact arithmetic reached a state the implementation asserts impossible.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace extremal

#ifndef PRECAT_ERRORS_HPP
#define PRECAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace precat {

// Violated precondition of an operation (ill-dimensioned composition,
// non-composable boundaries, missing generator, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed external input (syntax error in an expression, bad JSON shape).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broken; reaching this is a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace precat

#endif

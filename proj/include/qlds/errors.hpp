#ifndef QLDS_ERRORS_HPP
#define QLDS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlds {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix, determinant or scalar that must be invertible is not.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Shapes, structural properties (Hermitian, normal, ...) or argument ranges
/// do not satisfy an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Combinatorial enumeration would exceed the configured matrix order.
class CapExceededError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two independent routes to the same quantity disagree.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// The exact backend cannot represent a result (e.g. an irrational root).
class NotRepresentableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed literal or input document. `position` is a 0-based offset into
/// the text that failed to parse.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  explicit ParseError(const std::string& what) : Error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qlds

#endif  // QLDS_ERRORS_HPP

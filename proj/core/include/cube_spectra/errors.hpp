#pragma once

#include <stdexcept>
#include <string>

namespace cube {

/// Dense representation requested for more variables than the configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the documented domain of an operation.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parity requirement (e.g. d = l mod 2) violated.
class ParityError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Input violates an operation's contract (e.g. degree larger than declared).
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed function / sample file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query oracle ran out of samples, or a bounded sampling loop gave up.
class ExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ArgumentError with `message` when `condition` is false.
void require(bool condition, const std::string& message);

}  // namespace cube

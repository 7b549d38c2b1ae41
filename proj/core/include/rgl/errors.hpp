#pragma once

#include <stdexcept>
#include <string>

namespace rgl {

/// Caller supplied something outside an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for n <= (r-1)(t-1): the k = 0 window, where the degree
/// condition reads delta(G) >= n and no simple graph satisfies it.
class WindowError : public InputError {
 public:
  using InputError::InputError;
};

/// Input exceeds a hard or configured size bound of an exact routine.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Text could not be decoded (graph6, edge lists, certificates).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evidence inside a certificate is malformed.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search hit its node budget before reaching a verdict.
class UndecidedError : public std::runtime_error {
 public:
  UndecidedError(const std::string& what, long long nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  long long nodes() const noexcept { return nodes_; }

 private:
  long long nodes_;
};

/// A proven property failed on a concrete instance. Either a bug or a
/// counterexample; the message carries the instance.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rgl

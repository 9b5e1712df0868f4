#pragma once

#include <stdexcept>
#include <string>

namespace frobenian {

/// Malformed or out-of-domain input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap or brute-force budget was exceeded (exit code 3).
class ScaleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed to hold. Always a bug or a certificate
/// mismatch (exit code 1).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested prime divides a denominator, or is otherwise excluded.
class BadPrimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace frobenian

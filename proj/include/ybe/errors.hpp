#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but is not a non-degenerate involutive solution.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotBijective : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInvolutive : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotBraided : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GammaInconsistent : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A configured size/search bound was hit before the computation finished.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class ClassSearchExceeded : public GuardExceeded {
 public:
  using GuardExceeded::GuardExceeded;
};

class GermGuardExceeded : public GuardExceeded {
 public:
  using GuardExceeded::GuardExceeded;
};

class BallGuardExceeded : public GuardExceeded {
 public:
  using GuardExceeded::GuardExceeded;
};

// One pi-vector reached with two different permutations. Either the input
// slipped past validation or there is a bug; never a user error.
class PiCollision : public Error {
 public:
  using Error::Error;
};

// An internal consistency check on a computed structure failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ClassTooSmall : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ybe

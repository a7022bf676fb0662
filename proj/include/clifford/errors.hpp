#pragma once

#include <stdexcept>
#include <string>

namespace clifford {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSignature : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Paravector lies on (or numerically at) the null cone N(Z) = 0.
class NullConeError : public Error {
 public:
  using Error::Error;
};

/// N(Z) is real and non-positive: no right-half-plane square root exists.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

class OriginError : public Error {
 public:
  using Error::Error;
};

class StepError : public Error {
 public:
  using Error::Error;
};

class FrameError : public Error {
 public:
  using Error::Error;
};

class AngleRangeError : public Error {
 public:
  using Error::Error;
};

class NotOnSurfaceError : public Error {
 public:
  using Error::Error;
};

class NonFiniteIntegrand : public Error {
 public:
  using Error::Error;
};

class TransversalityError : public Error {
 public:
  using Error::Error;
};

class NonConvergedError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace clifford

#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole that is not cancelled.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A computation needs more derivatives or digits than are available.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference stencil left the working box.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// Richardson levels stopped contracting before reaching a stable value.
class NoiseFloorError : public Error {
 public:
  using Error::Error;
};

class DegenerateNodesError : public Error {
 public:
  using Error::Error;
};

/// Symbolic Mellin factors failed to cancel in an exact product.
class SymbolMismatchError : public Error {
 public:
  using Error::Error;
};

/// A Mellin value that must be divided by is (numerically) zero.
class MellinZeroError : public Error {
 public:
  using Error::Error;
};

class CutoffZeroError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlab

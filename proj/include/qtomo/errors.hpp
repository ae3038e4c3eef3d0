#pragma once

#include <stdexcept>
#include <string>

namespace qtomo {

/// Base class for all math-domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The q-exponential series argument lies outside the convergence disk.
class DivergentSeries final : public Error {
 public:
  using Error::Error;
};

/// A computed quantity left the representable floating-point range.
class OverflowError final : public Error {
 public:
  using Error::Error;
};

/// The tridiagonal eigensolver failed to converge (diagnostic only).
class EigensolveFailure final : public Error {
 public:
  using Error::Error;
};

/// A Fock index at or beyond the truncation was requested.
class IndexOutOfTruncation final : public Error {
 public:
  using Error::Error;
};

/// Coherent-state amplitude with |alpha|^2 >= 1/(1-q^2).
class OutsideConvergenceDisk final : public Error {
 public:
  using Error::Error;
};

/// The certified coefficient tail exceeds the requested tolerance.
class TruncationTooSmall final : public Error {
 public:
  using Error::Error;
};

/// State and spectral measure were built with different q or truncation.
class MeasureMismatch final : public Error {
 public:
  using Error::Error;
};

}  // namespace qtomo

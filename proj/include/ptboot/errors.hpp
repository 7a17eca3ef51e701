#pragma once

#include <stdexcept>
#include <string>

namespace ptboot {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Moment sequence too short for the requested Hankel block.
struct InsufficientDepth : Error {
  using Error::Error;
};

/// Matrix handed to the PSD test violates the Hermiticity invariant.
struct NotHermitian : Error {
  using Error::Error;
};

/// 2x2 family parameters outside the unbroken-PT region (s^2 - r^2 sin^2 theta <= 0).
struct BrokenPT : Error {
  using Error::Error;
};

/// Search point sits on a pole of a closed-form matrix entry; skip it.
struct SingularPoint : Error {
  using Error::Error;
};

/// Leading recursion coefficient vanished at this (t, E); skip the point.
struct SingularRecursion : Error {
  using Error::Error;
};

struct SeedCountMismatch : Error {
  using Error::Error;
};

struct DegreeTooHigh : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Refinement witness turned infeasible (tolerance-scale inconsistency).
struct WitnessLost : Error {
  using Error::Error;
};

struct NoFeasiblePoint : Error {
  using Error::Error;
};

/// Finite-difference oracle failed its Richardson convergence gate.
struct NotConverged : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace ptboot

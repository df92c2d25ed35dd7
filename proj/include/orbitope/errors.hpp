#pragma once

#include <stdexcept>

namespace orbitope {

/// Base class for every failure this library reports by exception.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All coefficients of a polynomial fall below the rejection tolerance.
struct IdenticallyZero : Error {
  using Error::Error;
};

/// Root clusters could not be resolved consistently at the requested tolerance.
struct IllConditioned : Error {
  using Error::Error;
};

/// Tangency pattern whose linear system does not have a one-dimensional null space.
struct DegeneratePattern : Error {
  using Error::Error;
};

/// Argument outside the domain of a closed-form expression.
struct DomainError : Error {
  using Error::Error;
};

/// No sign change found where the analysis guarantees one.
struct BracketFailure : Error {
  using Error::Error;
};

/// Two parameters that must be distinct coincide.
struct CoincidentPoints : Error {
  using Error::Error;
};

/// A configuration that must certify as safe failed to; surfaced loudly because
/// it would numerically falsify a proven bound.
struct SearchInconclusive : Error {
  using Error::Error;
};

/// Vector length does not match the ambient dimension 2k.
struct DimensionMismatch : Error {
  using Error::Error;
};

}  // namespace orbitope

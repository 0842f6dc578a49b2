// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace pstchain {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of an operation
/// (negative index, wrong size, non-increasing spectrum, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Chain parameters violate the positivity conditions, so the closed-form
/// weights (or couplings) are not guaranteed positive.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Two spectral points coincide; the theory requires a simple spectrum.
class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

/// Some interior u_n <= 0, so no real coupling J_n = sqrt(u_n) exists.
class NonPositiveCouplingError : public Error {
 public:
  using Error::Error;
};

/// Christoffel transform hit P_n(removed level) == 0.
class SingularTransformError : public Error {
 public:
  using Error::Error;
};

/// Removal of an interior spectral level was requested; only the extreme
/// levels keep the transformed coefficients positive.
class UnsupportedRemovalError : public Error {
 public:
  using Error::Error;
};

/// The discrete measure lost positivity of <P_n, P_n> during the Stieltjes
/// procedure (numerically indistinguishable nodes, degenerate weights).
class IllConditionedMeasureError : public Error {
 public:
  using Error::Error;
};

/// A design request violates the admissible (parity, M1, M2) restrictions.
class InvalidDesignError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver exceeded its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A document does not conform to the expected schema.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace pstchain

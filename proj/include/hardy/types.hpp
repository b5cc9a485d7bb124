#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Every library failure is reported through this hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (|z| >= 1 where |z| < 1 is
// required, grid size not a power of two, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A vector handed to an inner-vector test is not a unit vector.
class NonUnitVector : public Error {
 public:
  using Error::Error;
};

// A numerical decision could not be made safely (near-coincident zeros,
// singular values inside the rank gap, unpolishable roots).
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

// Two independently computed quantities that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

inline cplx unimodular(double theta) { return std::polar(1.0, theta); }

// Argument mapped to [0, 2*pi).
inline double arg_positive(cplx z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// Outcome of normalizing a vector that should already have unit norm.
struct UnitCheck {
  double norm = 0.0;
  bool rescaled = false;
  std::vector<std::string> warnings;
};

// Vectors whose norm is within this distance of 1 are silently (with a
// warning) rescaled; anything further off is rejected.
inline constexpr double kUnitRescaleTol = 1e-8;

// Validates `norm` against 1. Returns the check record; throws NonUnitVector
// when |norm - 1| exceeds max(tol, kUnitRescaleTol).
UnitCheck check_unit_norm(double norm, double tol, const std::string& what);

}  // namespace hardy

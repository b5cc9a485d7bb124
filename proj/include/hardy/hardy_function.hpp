#pragma once

#include <vector>

#include "hardy/polynomial.hpp"
#include "hardy/types.hpp"

namespace hardy {

/// Rational function analytic on a neighbourhood of the closed disk.
///
/// Stored as numerator(z) / prod_i (1 - c_i z) with 0 < |c_i| < 1, so every
/// pole 1/c_i lies strictly outside the closed disk. Keeping the denominator
/// factored makes sums exact (least common multiple of factor multisets) and
/// lets reduction deflate the numerator with the stable recurrence of
/// Polynomial::divide_one_minus instead of root finding.
class HardyFunction {
 public:
  HardyFunction() = default;
  // Polynomial (no poles).
  HardyFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  // numerator / prod (1 - c z); validates the pole parameters and reduces.
  HardyFunction(Polynomial numerator, std::vector<cplx> pole_params);

  // General quotient of coefficient lists (ascending). The denominator must
  // not vanish on the closed disk.
  static HardyFunction from_coefficients(const std::vector<cplx>& numerator,
                                         const std::vector<cplx>& denominator);
  static HardyFunction constant(cplx c) { return HardyFunction(Polynomial::constant(c)); }

  const Polynomial& numerator() const { return numerator_; }
  // Expanded prod (1 - c_i z).
  Polynomial denominator() const;
  const std::vector<cplx>& pole_params() const { return pole_params_; }
  std::vector<cplx> poles() const;

  cplx operator()(cplx z) const;
  bool is_zero() const { return numerator_.is_zero(); }

  HardyFunction operator+(const HardyFunction& o) const;
  HardyFunction operator-(const HardyFunction& o) const;
  HardyFunction operator*(const HardyFunction& o) const;
  HardyFunction operator*(cplx s) const;

  // Integer power (n >= 0).
  HardyFunction pow(int n) const;

 private:
  void validate_and_reduce();

  Polynomial numerator_;
  std::vector<cplx> pole_params_;
};

inline HardyFunction operator*(cplx s, const HardyFunction& f) { return f * s; }

// Absolute tolerance used when matching pole parameters or zeros.
inline constexpr double kRootMatchTol = 1e-10;

}  // namespace hardy

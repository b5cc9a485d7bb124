#pragma once

#include <span>
#include <vector>

#include "hardy/types.hpp"

namespace hardy {

/// Dense complex polynomial, coefficients in ascending order of degree.
/// The zero polynomial is stored as the single coefficient 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{cplx{0.0}} {}
  explicit Polynomial(std::vector<cplx> coeffs);
  Polynomial(std::initializer_list<cplx> coeffs)
      : Polynomial(std::vector<cplx>(coeffs)) {}

  static Polynomial constant(cplx c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, cplx c = 1.0);
  // Monic polynomial with the given roots.
  static Polynomial from_roots(std::span<const cplx> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator[](int k) const {
    return k >= 0 && k <= degree() ? coeffs_[k] : cplx{0.0};
  }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  cplx operator()(cplx z) const;
  Polynomial derivative() const;
  double l1_norm() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;

  // Divides by (1 - c z) using the recurrence q_k = p_k + c q_{k-1}, which is
  // forward-stable for |c| < 1. Returns the quotient and the remainder.
  std::pair<Polynomial, cplx> divide_one_minus(cplx c) const;

  // Roots from the eigenvalues of the companion matrix. Requires degree >= 1.
  std::vector<cplx> roots() const;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

inline Polynomial operator*(cplx s, const Polynomial& p) { return p * s; }

}  // namespace hardy

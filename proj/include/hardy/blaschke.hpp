#pragma once

#include <vector>

#include "hardy/hardy_function.hpp"
#include "hardy/polynomial.hpp"
#include "hardy/types.hpp"

namespace hardy {

/// Finite Blaschke product  constant * prod_j (z - a_j) / (1 - conj(a_j) z).
///
/// Repeated zeros are repeated entries. The constant is unimodular and every
/// zero satisfies |a_j| < 1 - 1e-12. A product with no zeros is the unimodular
/// constant itself (degree 0).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx constant = 1.0);

  // z^n.
  static BlaschkeProduct z_power(int n);
  // Single factor (z - a) / (1 - conj(a) z).
  static BlaschkeProduct factor(cplx a);

  int degree() const { return static_cast<int>(zeros_.size()); }
  cplx constant() const { return constant_; }
  const std::vector<cplx>& zeros() const { return zeros_; }

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  // d/dtheta arg u(e^{i theta}) = |u'(e^{i theta})| = sum of Poisson kernels.
  double boundary_phase_speed(double theta) const;

  // constant * prod (z - a_j) and prod (1 - conj(a_j) z).
  Polynomial numerator() const;
  Polynomial denominator() const;
  HardyFunction as_hardy() const;

  BlaschkeProduct operator*(const BlaschkeProduct& o) const;
  BlaschkeProduct pow(int n) const;

 private:
  cplx constant_ = 1.0;
  std::vector<cplx> zeros_;
};

/// The degree(u) solutions of u(zeta) = alpha on the circle, sorted by
/// argument in [0, 2 pi). Roots of the cleared-denominator polynomial are
/// found from the companion matrix and then polished by Newton steps on the
/// boundary phase theta -> arg u(e^{i theta}).
std::vector<cplx> boundary_level_set(const BlaschkeProduct& u, cplx alpha);

/// Multiset containment of zeros (matched within kRootMatchTol).
bool divides(const BlaschkeProduct& v, const BlaschkeProduct& u);
/// Multiset intersection of zeros, constant 1.
BlaschkeProduct gcd_inner(const BlaschkeProduct& u, const BlaschkeProduct& v);
/// u / v for v dividing u; throws DomainError otherwise.
BlaschkeProduct quotient(const BlaschkeProduct& u, const BlaschkeProduct& v);

}  // namespace hardy

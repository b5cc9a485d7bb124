#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/op_poisson.hpp"
#include "support.hpp"

using namespace hardy;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

MatrixXcd random_contraction(oracle::Rng& rng, int n, double target_norm) {
  MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  }
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  return m * (target_norm / svd.singularValues()(0));
}

VectorXcd random_unit(oracle::Rng& rng, int n) {
  VectorXcd x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.normal();
  return x / x.norm();
}

}  // namespace

TEST_CASE("scalar contraction: closed-form Poisson kernel") {
  const cplx c(0.3, 0.6);
  const cplx lambda(-0.2, 0.5);
  const ContractionMatrix t(MatrixXcd::Constant(1, 1, c));
  const double expected = (1.0 - std::norm(lambda) * std::norm(c)) / std::norm(1.0 - std::conj(lambda) * c);
  CHECK(std::abs(op_poisson_kernel(t, lambda)(0, 0) - expected) < 1e-14);
  CHECK(std::abs(op_poisson_kernel_factored(t, lambda)(0, 0) - expected) < 1e-14);
}

TEST_CASE("diagonal unitary: quadratic form is a mix of Poisson kernels") {
  const Eigen::Vector3d th(0.3, 2.0, 4.5);
  MatrixXcd d = MatrixXcd::Zero(3, 3);
  for (int i = 0; i < 3; ++i) d(i, i) = unimodular(th(i));
  const ContractionMatrix t(d);
  VectorXcd x(3);
  x << 0.6, cplx(0, 0.48), 0.64;
  const cplx lambda(0.4, -0.3);
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) expected += std::norm(x(i)) * poisson_kernel(lambda, unimodular(th(i)));
  CHECK(std::abs(positivity_certificate(t, lambda, x) - expected) < 1e-13);
  // Moments are sum |x_i|^2 e^{i n theta_i}.
  const MomentSequence m = measure_moments(t, x, 3);
  cplx m2 = 0.0;
  for (int i = 0; i < 3; ++i) m2 += std::norm(x(i)) * unimodular(2 * th(i));
  CHECK(std::abs(m.positive_moments[2] - m2) < 1e-14);
  const FourierCoeffs f = m.to_fourier();
  CHECK(std::abs(f.coeff(-2) - m2) < 1e-14);
  CHECK(std::abs(f.coeff(2) - std::conj(m2)) < 1e-14);
  CHECK(f.is_hermitian(1e-15));
}

TEST_CASE("contraction validation") {
  CHECK_THROWS_AS(ContractionMatrix(MatrixXcd::Identity(2, 2) * 1.01), DomainError);
  CHECK_THROWS_AS(ContractionMatrix(MatrixXcd::Zero(2, 3)), DomainError);
  CHECK_NOTHROW(ContractionMatrix(MatrixXcd::Identity(2, 2)));
  const ContractionMatrix t(MatrixXcd::Identity(2, 2) * 0.5);
  CHECK_THROWS_AS(op_poisson_kernel(t, cplx(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(measure_moments(t, VectorXcd::Ones(3), 2), DomainError);
}

TEST_CASE("random contractions: positivity, identity agreement and Herglotz series") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(1, 8);
    const ContractionMatrix t(random_contraction(rng, n, rng.uniform(0.1, 0.95)));
    const VectorXcd x = random_unit(rng, n);
    const cplx lambda = rng.disk(0.95);
    const double p = positivity_certificate(t, lambda, x);
    CHECK(p >= 0.0);
    const MatrixXcd k1 = op_poisson_kernel(t, lambda);
    const MatrixXcd k2 = op_poisson_kernel_factored(t, lambda);
    CHECK((k1 - k2).norm() < 1e-10);
    // The kernel is self-adjoint.
    CHECK((k1 - k1.adjoint()).norm() < 1e-10);
    const HerglotzConsistency h = herglotz_consistency(t, x, lambda);
    CHECK(h.consistent);
    CHECK_FALSE(h.skipped);
  }
}

TEST_CASE("Herglotz comparison is skipped for isometries near the circle") {
  const ContractionMatrix t(MatrixXcd::Identity(2, 2));
  const HerglotzConsistency h = herglotz_consistency(t, VectorXcd::Ones(2) / std::sqrt(2.0), cplx(0.9, 0));
  CHECK(h.skipped);
}

TEST_CASE("T-inner vectors of the nilpotent shift") {
  MatrixXcd s = MatrixXcd::Zero(3, 3);
  s(1, 0) = 1.0;
  s(2, 1) = 1.0;
  const ContractionMatrix t(s);
  VectorXcd e0 = VectorXcd::Zero(3);
  e0(0) = 1.0;
  CHECK(is_T_inner(t, e0, 12).is_inner);
  VectorXcd mix = VectorXcd::Zero(3);
  mix(0) = mix(1) = 1.0 / std::sqrt(2.0);
  const TInnerReport r = is_T_inner(t, mix, 12);
  CHECK_FALSE(r.is_inner);
  CHECK(r.first_nonzero == 1);
  CHECK(std::abs(r.first_nonzero_magnitude - 0.5) < 1e-15);
  CHECK_THROWS_AS(is_T_inner(t, mix * 2.0, 12), NonUnitVector);
}

TEST_CASE("bilinear moments") {
  oracle::Rng rng(10);
  const ContractionMatrix t(random_contraction(rng, 4, 0.8));
  const VectorXcd x = random_unit(rng, 4);
  const VectorXcd y = random_unit(rng, 4);
  const BilinearMoments b = bilinear_moments(t, x, y, 3);
  const MatrixXcd& m = t.entries();
  CHECK(std::abs(b.forward[2] - y.dot(m * m * x)) < 1e-14);
  CHECK(std::abs(b.adjoint[3] - y.dot(m.adjoint() * m.adjoint() * m.adjoint() * x)) < 1e-14);
  CHECK(std::abs(b.forward[0] - y.dot(x)) < 1e-15);
}

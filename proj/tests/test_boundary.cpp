#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hardy/boundary.hpp"
#include "hardy/hardy_function.hpp"
#include "hardy/polynomial.hpp"
#include "support.hpp"

using namespace hardy;

TEST_CASE("polynomial arithmetic and Horner evaluation") {
  const Polynomial p({1.0, cplx(0, 2), -3.0});
  const Polynomial q({cplx(0.5, -1), 1.0});
  const cplx z(0.3, -0.7);
  CHECK(std::abs((p * q)(z) - p(z) * q(z)) < 1e-14);
  CHECK(std::abs((p + q)(z) - (p(z) + q(z))) < 1e-14);
  CHECK(std::abs((p - q)(z) - (p(z) - q(z))) < 1e-14);
  CHECK(std::abs(p.derivative()(z) - (cplx(0, 2) - 6.0 * z)) < 1e-14);
  CHECK((p - p).is_zero());
  CHECK(Polynomial::monomial(3).degree() == 3);
}

TEST_CASE("divide_one_minus inverts multiplication by (1 - c z)") {
  const cplx c(0.4, 0.5);
  const Polynomial q({2.0, cplx(-1, 1), 0.25, cplx(0, 3)});
  const Polynomial p = q * Polynomial({1.0, -c});
  const auto [quot, rem] = p.divide_one_minus(c);
  CHECK(std::abs(rem) < 1e-14);
  for (int k = 0; k <= q.degree(); ++k) CHECK(std::abs(quot[k] - q[k]) < 1e-14);
  // Remainder equals p(1/c) scaled: p = (1 - c z) quot + rem z^n.
  const Polynomial r({1.0, 2.0, 3.0});
  const auto [q2, rem2] = r.divide_one_minus(c);
  const cplx z(0.1, 0.2);
  CHECK(std::abs((Polynomial({1.0, -c}) * q2)(z) + rem2 * z * z - r(z)) < 1e-14);
}

TEST_CASE("companion roots recover known roots") {
  const std::vector<cplx> roots{cplx(0.5, 0.1), cplx(-0.3, 0.7), 2.0, cplx(0, -1)};
  const Polynomial p = Polynomial::from_roots(roots);
  auto found = p.roots();
  REQUIRE(found.size() == roots.size());
  for (cplx r : roots) {
    double best = 1e300;
    for (cplx f : found) best = std::min(best, std::abs(f - r));
    CHECK(best < 1e-12);
  }
  CHECK_THROWS_AS(Polynomial::constant(3.0).roots(), DomainError);
}

TEST_CASE("grid validation and exact quarter nodes") {
  CHECK(is_valid_grid_size(8));
  CHECK(is_valid_grid_size(4096));
  CHECK_FALSE(is_valid_grid_size(4));
  CHECK_FALSE(is_valid_grid_size(100));
  CHECK(BoundaryGrid::node(0, 16) == cplx(1, 0));
  CHECK(BoundaryGrid::node(4, 16) == cplx(0, 1));
  CHECK(BoundaryGrid::node(8, 16) == cplx(-1, 0));
  CHECK(BoundaryGrid::node(12, 16) == cplx(0, -1));
  CHECK_THROWS_AS(sample_boundary([](cplx) { return cplx(1); }, 12), DomainError);
  CHECK_THROWS_AS(sample_boundary([](cplx z) { return 1.0 / (z - 1.0); }, 16), DomainError);
}

TEST_CASE("Fourier coefficients of a trigonometric polynomial") {
  // g = 2 + 3 xi^2 - i conj(xi)^5
  const BoundaryGrid g = sample_boundary(
      [](cplx xi) { return 2.0 + 3.0 * xi * xi - cplx(0, 1) * std::pow(std::conj(xi), 5); }, 64);
  const FourierCoeffs c = fourier_coeffs(g, 8);
  CHECK(std::abs(c.coeff(0) - 2.0) < 1e-14);
  CHECK(std::abs(c.coeff(2) - 3.0) < 1e-14);
  CHECK(std::abs(c.coeff(-5) - cplx(0, -1)) < 1e-14);
  CHECK(std::abs(c.coeff(1)) < 1e-14);
  CHECK(c.coeff(20) == cplx(0));
  CHECK_FALSE(c.is_hermitian(1e-10));
  CHECK_THROWS_AS(fourier_coeffs(g, 32), DomainError);
}

TEST_CASE("quadrature inner product matches the Taylor-series oracle") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> n1{rng.normal(), rng.normal(), rng.normal()};
    std::vector<cplx> n2{rng.normal(), rng.normal()};
    const HardyFunction f(Polynomial(n1), {rng.disk(0.8), rng.disk(0.8)});
    const HardyFunction g(Polynomial(n2), {rng.disk(0.8)});
    const BoundaryFn ff = [&](cplx z) { return f(z); };
    const BoundaryFn gg = [&](cplx z) { return g(z); };
    const cplx q = h2_inner_product(ff, gg, 4096).value;
    const cplx t = oracle::inner(f, g);
    CHECK(std::abs(q - t) < 1e-12 * (1.0 + std::abs(t)));
    CHECK(std::abs(h2_norm(ff) - oracle::norm(f)) < 1e-12 * oracle::norm(f));
  }
}

TEST_CASE("Poisson kernel reproduces harmonic functions") {
  const cplx lambda(0.3, -0.4);
  // Re of an analytic polynomial is harmonic.
  const BoundaryFn h = [](cplx xi) { return cplx((1.0 + 2.0 * xi + xi * xi * xi).real(), 0.0); };
  const BoundaryGrid hp = sample_boundary(
      [&](cplx xi) { return h(xi) * poisson_kernel(lambda, xi); }, 1024);
  const double expected = (1.0 + 2.0 * lambda + lambda * lambda * lambda).real();
  CHECK(std::abs(integrate(hp).value - expected) < 1e-13);
  CHECK(std::abs(integrate(sample_boundary([&](cplx xi) { return cplx(poisson_kernel(lambda, xi)); }, 1024)).value - 1.0) < 1e-13);
}

TEST_CASE("Herglotz sum from moments equals the Poisson integral") {
  // Measure |1 + 0.5 xi|^2 dm has coeff(0) = 1.25, coeff(+-1) = 0.5.
  const BoundaryGrid w = sample_boundary([](cplx xi) { return cplx(std::norm(1.0 + 0.5 * xi)); }, 256);
  const FourierCoeffs c = fourier_coeffs(w, 20);
  CHECK(c.is_hermitian(1e-14));
  const cplx lambda(0.6, 0.2);
  const HerglotzValue v = poisson_eval_from_moments(c, lambda);
  const double direct = std::norm(1.0 + 0.5 * lambda) - 0.25 * std::norm(lambda) + 0.25;
  CHECK(std::abs(v.value - direct) < 1e-12);
  CHECK(v.truncation_bound < 1e-3);
  CHECK_THROWS_AS(poisson_eval_from_moments(c, cplx(1.0, 0.0)), DomainError);
}

TEST_CASE("HardyFunction reduction, sums and validation") {
  const cplx c(0.5, 0.2);
  // (1 - c z)(2 + z) / (1 - c z) reduces to a polynomial.
  const HardyFunction f(Polynomial({1.0, -c}) * Polynomial({2.0, 1.0}), {c});
  CHECK(f.pole_params().empty());
  CHECK(f.numerator().degree() == 1);
  const HardyFunction g(Polynomial({1.0}), {c});
  const HardyFunction h(Polynomial({cplx(0, 1)}), {cplx(-0.3, 0.1)});
  const cplx z(0.2, 0.9);
  CHECK(std::abs((g + h)(z) - (g(z) + h(z))) < 1e-14);
  CHECK(std::abs((g * h)(z) - g(z) * h(z)) < 1e-14);
  CHECK(std::abs((g - g)(z)) < 1e-14);
  CHECK((g - g).is_zero());
  CHECK((g + g).pole_params().size() == 1);
  CHECK(std::abs(g.pow(3)(z) - std::pow(g(z), 3)) < 1e-13);
  const HardyFunction q = HardyFunction::from_coefficients({1.0, 1.0}, {2.0, -1.0});
  CHECK(std::abs(q(z) - (1.0 + z) / (2.0 - z)) < 1e-14);
  CHECK_THROWS_AS(HardyFunction::from_coefficients({1.0}, {0.5, -1.0}), DomainError);
  CHECK_THROWS_AS(HardyFunction::from_coefficients({1.0}, {0.0, 1.0}), DomainError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "hardy/wold.hpp"
#include "support.hpp"

using namespace hardy;

namespace {

BoundaryFn fn(const HardyFunction& f) {
  return [f](cplx z) { return f(z); };
}

HardyFunction random_rational(oracle::Rng& rng) {
  std::vector<cplx> num;
  for (int k = rng.integer(1, 4); k > 0; --k) num.push_back(rng.normal());
  const HardyFunction g(Polynomial(num), {rng.disk(0.7)});
  return g * (1.0 / oracle::norm(g));
}

// f_j(w) from f(z_i) = sum_j F_j(z_i) f_j(w) over the d solutions of u(z) = w.
std::vector<cplx> branches_by_level_set(const HardyFunction& f, const BlaschkeProduct& u, cplx w) {
  const Polynomial eq = u.numerator() - u.denominator() * w;
  const auto z = eq.roots();
  const TMBasis b = tm_basis(u);
  const int d = u.degree();
  Eigen::MatrixXcd a(d, d);
  Eigen::VectorXcd rhs(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = b.basis[size_t(j)](z[size_t(i)]);
    rhs(i) = f(z[size_t(i)]);
  }
  const Eigen::VectorXcd x = a.fullPivLu().solve(rhs);
  return std::vector<cplx>(x.data(), x.data() + d);
}

}  // namespace

TEST_CASE("branch functions agree with the level-set linear solve") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const BlaschkeProduct u(rng.separated_zeros(rng.integer(1, 4), 0.7, 0.1));
    const HardyFunction f = random_rational(rng);
    const BranchFunctions br = branch_functions(wold_expand_adaptive(fn(f), u));
    for (int s = 0; s < 3; ++s) {
      const cplx w = rng.disk(0.5);
      const auto expected = branches_by_level_set(f, u, w);
      for (int j = 0; j < u.degree(); ++j) {
        CHECK(std::abs(br.branches[size_t(j)](w) - expected[size_t(j)]) < 1e-9);
      }
    }
    const cplx z = rng.disk(0.9);
    CHECK(std::abs(br.reconstruct(z) - f(z)) < 1e-10);
    CHECK(std::abs(br.norm_squared() - 1.0) < 1e-10);
  }
}

TEST_CASE("explicit branches for u = z^2 and f = (1 + z^3)/sqrt(2)") {
  const double s = 1.0 / std::sqrt(2.0);
  const HardyFunction f(Polynomial({s, 0.0, 0.0, s}));
  const WoldExpansion w = wold_expand(fn(f), BlaschkeProduct::z_power(2), 4);
  CHECK(std::abs(w.coeffs(0, 0) - s) < 1e-14);
  CHECK(std::abs(w.coeffs(1, 1) - s) < 1e-14);
  CHECK(std::abs(w.coeffs(1, 0)) < 1e-14);
  CHECK(w.residual < 1e-13);
  CHECK(std::abs(w.parseval_gap()) < 1e-13);
  const BranchFunctions b = branch_functions(w);
  const cplx xi = unimodular(0.7);
  CHECK(std::abs(b.density(xi) - 1.0) < 1e-13);
}

TEST_CASE("adaptive expansion converges for rational f") {
  oracle::Rng rng(6);
  const BlaschkeProduct u({cplx(0.5, 0), cplx(0, -1.0 / 3.0)});
  const HardyFunction f = random_rational(rng);
  const WoldExpansion w = wold_expand_adaptive(fn(f), u);
  CHECK(w.residual < 1e-12);
  CHECK(w.k_max < 256);
  CHECK(std::abs(w.parseval_gap()) < 1e-11);
  CHECK(w.branch_tail_bound >= 0.0);
}

TEST_CASE("orthogonal-block constructions are inner for all three tests") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const BlaschkeProduct u(rng.separated_zeros(rng.integer(1, 4), 0.8, 0.05));
    std::vector<cplx> alpha;
    double n2 = 0.0;
    for (int j = 0; j < u.degree(); ++j) {
      alpha.push_back(rng.normal());
      n2 += std::norm(alpha.back());
    }
    for (cplx& a : alpha) a /= std::sqrt(n2);
    const HardyFunction f = orthogonal_block_construct(u, alpha);
    // Expanded numerators lose a few digits when zeros cluster near the circle.
    CHECK(std::abs(oracle::norm(f) - 1.0) < 1e-9);
    CHECK(stessin_inner_test(fn(f), u).is_inner);
    const MomentReport m = moment_inner_test(fn(f), [u](cplx z) { return u(z); });
    CHECK(m.is_inner_up_to_n);
    CHECK(m.max_abs < 1e-9);
    CHECK(wold_orthogonality_test(wold_expand_adaptive(fn(f), u), 16).passed);
  }
}

TEST_CASE("non-inner vectors fail the Stessin and moment tests") {
  const BlaschkeProduct u({cplx(0.5, 0), cplx(0, 0.3)});
  const HardyFunction f = HardyFunction(Polynomial({1.0, 1.0})) * (1.0 / std::sqrt(2.0));
  const InnerTestReport s = stessin_inner_test(fn(f), u);
  CHECK_FALSE(s.is_inner);
  CHECK(s.max_deviation > 1e-3);
  const MomentReport m = moment_inner_test(fn(f), [u](cplx z) { return u(z); });
  CHECK_FALSE(m.is_inner_up_to_n);
  CHECK(m.first_nonzero == 1);
  CHECK_FALSE(wold_orthogonality_test(wold_expand_adaptive(fn(f), u), 8).passed);
}

TEST_CASE("unit-norm policy") {
  const HardyFunction two = HardyFunction::constant(2.0);
  CHECK_THROWS_AS(stessin_inner_test(fn(two), BlaschkeProduct::z_power(1)), NonUnitVector);
  // Moment test normalizes and warns.
  const MomentReport m = moment_inner_test(fn(two), [](cplx z) { return z; });
  CHECK(m.is_inner_up_to_n);
  CHECK_FALSE(m.warnings.empty());
  // Within 1e-8 the vector is rescaled with a warning.
  const HardyFunction near = HardyFunction::constant(1.0 + 5e-9);
  const InnerTestReport s = stessin_inner_test(fn(near), BlaschkeProduct::z_power(1));
  CHECK(s.is_inner);
  CHECK_FALSE(s.warnings.empty());
  CHECK_THROWS_AS(orthogonal_block_construct(BlaschkeProduct::z_power(2), {1.0, 1.0}), NonUnitVector);
}

TEST_CASE("moments of |f|^2 against z^n match the Fourier coefficients") {
  // |1 + z/2|^2 / 1.25 has first moment 0.5/1.25 and nothing after.
  const HardyFunction f = HardyFunction(Polynomial({1.0, 0.5})) * (1.0 / std::sqrt(1.25));
  const MomentReport m = moment_inner_test(fn(f), [](cplx z) { return z; }, 4);
  CHECK(std::abs(m.moments[0] - 0.4) < 1e-14);
  CHECK(std::abs(m.moments[1]) < 1e-14);
  CHECK(m.first_nonzero == 1);
}

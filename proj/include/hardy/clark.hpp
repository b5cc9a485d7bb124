#pragma once

#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/boundary.hpp"
#include "hardy/wold.hpp"

namespace hardy {

struct ClarkAtom {
  cplx zeta;
  double mass = 0.0;
};

/// Atomic measure sigma_alpha on the circle, possibly truncated. For a
/// truncated measure `tail_bound` bounds the total mass of the dropped atoms.
struct ClarkMeasure {
  cplx alpha;
  std::vector<ClarkAtom> atoms;
  bool truncated = false;
  double tail_bound = 0.0;

  double total_mass() const;
};

/// (1 - |u(0)|^2) / |alpha - u(0)|^2, the total mass of sigma_alpha.
double herglotz_mass(cplx u_at_zero, cplx alpha);

/// Atoms at the solutions of u(zeta) = alpha, masses 1 / |u'(zeta)|.
ClarkMeasure clark_finite_blaschke(const BlaschkeProduct& u, cplx alpha);

/// exp((z + 1) / (z - 1)), the inner function with a single atom at 1.
cplx atomic_inner(cplx z);

/// Clark measure of atomic_inner at alpha = e^{it}, atoms for |k| <= K:
/// zeta_k = (i x_k + 1) / (i x_k - 1), x_k = t + 2 pi k, mass 2 / (1 + x_k^2).
/// t is reduced to [0, 2 pi); tail_bound = 2 / (pi^2 (2K - 1)).
ClarkMeasure clark_atomic(double t, int truncation);

struct ClarkIntegral {
  cplx value;
  // tail_bound times an estimate of sup |g| near the accumulation point 1.
  double uncertainty = 0.0;
};

ClarkIntegral integrate_against_clark(const BoundaryFn& g, const ClarkMeasure& sigma);

/// Uniform average over alpha_m = exp(2 pi i m / n_alpha) of the integral of
/// g against sigma_alpha; approximates the integral of g dm.
cplx aleksandrov_disintegrate(const BoundaryFn& g, const BlaschkeProduct& u, int n_alpha);

/// sum_j |f(zeta_j)|^2 / |u'(zeta_j)| over the level set u = alpha.
double clark_density(const BlaschkeProduct& u, const BoundaryFn& f, cplx alpha);

/// sum_j f(zeta_j) conj(g(zeta_j)) / |u'(zeta_j)|.
cplx bilinear_clark_density(const BlaschkeProduct& u, const BoundaryFn& f,
                            const BoundaryFn& g, cplx alpha);

inline constexpr int kDefaultAlphaSamples = 256;

/// max over alpha on a uniform grid of |clark_density - 1|.
InnerTestReport clark_inner_test(const BlaschkeProduct& u, const BoundaryFn& f,
                                 int n_alpha = kDefaultAlphaSamples, double tol = 1e-9,
                                 int norm_grid_size = kDefaultGridSize);

/// |F| on the circle for the square-integrable boundary function built from
/// a_k = 1 / (1 + |k|^beta): |F(e^{i theta})| = sqrt(2) |a_k| / |e^{i theta} - 1|
/// where k indexes the interval [-pi + 2 pi k, pi + 2 pi k) that contains
/// the Cayley coordinate -cot(theta / 2).
double atomic_boundary_modulus(double beta, cplx zeta);

struct AtomicDensityReport {
  double beta = 0.0;
  double t = 0.0;  // reduced to [-pi, pi)
  int truncation = 0;
  // sum_{|k| <= K} |F(zeta_k)|^2 mass_k, evaluated atom by atom.
  double density = 0.0;
  // sum_{|k| <= K} a_k^2.
  double target = 0.0;
  // sum_{|k| > K} a_k^2 <= 2 K^{1 - 2 beta} / (2 beta - 1).
  double bound = 0.0;
  // Largest |F(zeta_k)|^2 seen, and its k.
  double max_modulus_squared = 0.0;
  int argmax_k = 0;
};

/// sum_{|k| <= K} a_k^2 computed by direct summation.
double atomic_coefficient_sum(double beta, int truncation);

AtomicDensityReport atomic_inner_vector_density(double beta, double t, int truncation);

}  // namespace hardy

#include "hardy/clark.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

// Cayley image of a real number: (i x + 1) / (i x - 1).
cplx cayley(double x) { return (cplx(0.0, x) + 1.0) / (cplx(0.0, x) - 1.0); }

double atomic_coefficient(double beta, long long k) {
  return 1.0 / (1.0 + std::pow(static_cast<double>(std::llabs(k)), beta));
}

void check_beta(double beta) {
  if (!(beta > 0.5 && beta < 1.0)) {
    throw DomainError("beta must lie in (1/2, 1), got " + std::to_string(beta));
  }
}

}  // namespace

double ClarkMeasure::total_mass() const {
  double s = 0.0;
  for (const ClarkAtom& a : atoms) s += a.mass;
  return s;
}

double herglotz_mass(cplx u_at_zero, cplx alpha) {
  return (1.0 - std::norm(u_at_zero)) / std::norm(alpha - u_at_zero);
}

ClarkMeasure clark_finite_blaschke(const BlaschkeProduct& u, cplx alpha) {
  ClarkMeasure m;
  m.alpha = alpha / std::abs(alpha);
  for (cplx zeta : boundary_level_set(u, alpha)) {
    m.atoms.push_back({zeta, 1.0 / std::abs(u.derivative(zeta))});
  }
  return m;
}

cplx atomic_inner(cplx z) { return std::exp((z + 1.0) / (z - 1.0)); }

ClarkMeasure clark_atomic(double t, int truncation) {
  if (truncation < 1) throw DomainError("clark_atomic needs K >= 1");
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  ClarkMeasure m;
  m.alpha = unimodular(t);
  m.truncated = true;
  m.tail_bound = 2.0 / (kPi * kPi * (2.0 * truncation - 1.0));
  for (int k = -truncation; k <= truncation; ++k) {
    const double x = t + kTwoPi * k;
    const cplx zeta = cayley(x);
    m.atoms.push_back({zeta, 2.0 / (1.0 + x * x)});
  }
  return m;
}

ClarkIntegral integrate_against_clark(const BoundaryFn& g, const ClarkMeasure& sigma) {
  ClarkIntegral out;
  out.value = 0.0;
  for (size_t i = 0; i < sigma.atoms.size(); ++i) {
    const ClarkAtom& a = sigma.atoms[i];
    cplx gv;
    try {
      gv = g(a.zeta);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "evaluation failed at atom " << i << " (zeta = " << a.zeta << "): " << e.what();
      throw DomainError(msg.str());
    }
    if (!std::isfinite(gv.real()) || !std::isfinite(gv.imag())) {
      std::ostringstream msg;
      msg << "non-finite value at atom " << i << " (zeta = " << a.zeta << ")";
      throw DomainError(msg.str());
    }
    out.value += gv * a.mass;
  }
  if (sigma.truncated && !sigma.atoms.empty()) {
    // Atoms are stored by k, so the ends are the ones closest to 1.
    const double sup = std::max(std::abs(g(sigma.atoms.front().zeta)),
                                std::abs(g(sigma.atoms.back().zeta)));
    out.uncertainty = sigma.tail_bound * sup;
  }
  return out;
}

cplx aleksandrov_disintegrate(const BoundaryFn& g, const BlaschkeProduct& u, int n_alpha) {
  if (n_alpha < 1) throw DomainError("need at least one alpha sample");
  cplx acc = 0.0;
  for (int m = 0; m < n_alpha; ++m) {
    const cplx alpha = BoundaryGrid::node(m, n_alpha);
    acc += integrate_against_clark(g, clark_finite_blaschke(u, alpha)).value;
  }
  return acc / double(n_alpha);
}

double clark_density(const BlaschkeProduct& u, const BoundaryFn& f, cplx alpha) {
  double s = 0.0;
  for (cplx zeta : boundary_level_set(u, alpha)) {
    s += std::norm(f(zeta)) / std::abs(u.derivative(zeta));
  }
  return s;
}

cplx bilinear_clark_density(const BlaschkeProduct& u, const BoundaryFn& f,
                            const BoundaryFn& g, cplx alpha) {
  cplx s = 0.0;
  for (cplx zeta : boundary_level_set(u, alpha)) {
    s += f(zeta) * std::conj(g(zeta)) / std::abs(u.derivative(zeta));
  }
  return s;
}

InnerTestReport clark_inner_test(const BlaschkeProduct& u, const BoundaryFn& f, int n_alpha,
                                 double tol, int norm_grid_size) {
  if (n_alpha < 1) throw DomainError("need at least one alpha sample");
  InnerTestReport r;
  r.method = "clark";
  r.tolerance = tol;
  r.grid_size = norm_grid_size;
  r.depth = n_alpha;
  const double norm = h2_norm(f, norm_grid_size);
  const UnitCheck unit = check_unit_norm(norm, tol, "f");
  r.warnings = unit.warnings;
  const double scale = 1.0 / (norm * norm);
  for (int m = 0; m < n_alpha; ++m) {
    const double density = clark_density(u, f, BoundaryGrid::node(m, n_alpha)) * scale;
    r.max_deviation = std::max(r.max_deviation, std::abs(density - 1.0));
  }
  r.is_inner = r.max_deviation <= tol;
  r.note = "max over alpha of |sum_j |f(zeta_j)|^2 / |u'(zeta_j)| - 1|";
  return r;
}

double atomic_boundary_modulus(double beta, cplx zeta) {
  check_beta(beta);
  const double theta = std::arg(zeta);
  if (theta == 0.0) throw DomainError("|F| is unbounded at the accumulation point 1");
  const double x = -1.0 / std::tan(theta / 2.0);
  const long long k = static_cast<long long>(std::floor((x + kPi) / kTwoPi));
  return std::sqrt(2.0) * atomic_coefficient(beta, k) / std::abs(zeta - 1.0);
}

double atomic_coefficient_sum(double beta, int truncation) {
  check_beta(beta);
  // Smallest terms first.
  double s = 0.0;
  for (long long k = truncation; k >= 1; --k) s += 2.0 * std::pow(atomic_coefficient(beta, k), 2);
  return s + 1.0;
}

AtomicDensityReport atomic_inner_vector_density(double beta, double t, int truncation) {
  check_beta(beta);
  if (truncation < 10) throw DomainError("atomic density needs K >= 10");
  AtomicDensityReport r;
  r.beta = beta;
  r.truncation = truncation;
  // With t in [-pi, pi) the atom with index k lands in interval k.
  t = std::fmod(t + kPi, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  r.t = t - kPi;

  std::vector<double> terms;
  terms.reserve(2 * static_cast<size_t>(truncation) + 1);
  for (int k = -truncation; k <= truncation; ++k) {
    const double x = r.t + kTwoPi * k;
    const cplx zeta = cayley(x);
    const double mass = std::norm(zeta - 1.0) / 2.0;
    const double mod = atomic_boundary_modulus(beta, zeta);
    const double mod2 = mod * mod;
    terms.push_back(mod2 * mass);
    if (mod2 > r.max_modulus_squared) {
      r.max_modulus_squared = mod2;
      r.argmax_k = k;
    }
  }
  std::sort(terms.begin(), terms.end());
  for (double v : terms) r.density += v;
  r.target = atomic_coefficient_sum(beta, truncation);
  r.bound = 2.0 * std::pow(static_cast<double>(truncation), 1.0 - 2.0 * beta) / (2.0 * beta - 1.0);
  return r;
}

}  // namespace hardy

#include "hardy/op_poisson.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

void check_lambda(cplx lambda) {
  if (!(std::abs(lambda) < 1.0)) throw DomainError("Poisson kernel needs |lambda| < 1");
}

void check_vector(const ContractionMatrix& t, const VectorXcd& x) {
  if (x.size() != t.dim()) throw DomainError("vector length does not match matrix size");
}

}  // namespace

ContractionMatrix::ContractionMatrix(MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw DomainError("contraction must be a nonempty square matrix");
  }
  if (!entries_.allFinite()) throw DomainError("contraction has non-finite entries");
  Eigen::JacobiSVD<MatrixXcd> svd(entries_);
  norm_ = svd.singularValues()(0);
  if (norm_ > 1.0 + 1e-10) {
    throw DomainError("matrix is not a contraction: largest singular value " +
                      std::to_string(norm_));
  }
}

FourierCoeffs MomentSequence::to_fourier() const {
  const int m = count();
  std::vector<cplx> v(static_cast<size_t>(2 * m + 1));
  for (int n = 0; n <= m; ++n) {
    v[static_cast<size_t>(m - n)] = positive_moments[static_cast<size_t>(n)];
    v[static_cast<size_t>(m + n)] = std::conj(positive_moments[static_cast<size_t>(n)]);
  }
  v[static_cast<size_t>(m)] = positive_moments[0];
  return FourierCoeffs(m, std::move(v));
}

MatrixXcd op_poisson_kernel(const ContractionMatrix& t, cplx lambda) {
  check_lambda(lambda);
  const int n = t.dim();
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const MatrixXcd& m = t.entries();
  const MatrixXcd a = (id - lambda * m.adjoint()).partialPivLu().inverse();
  const MatrixXcd b = (id - std::conj(lambda) * m).partialPivLu().inverse();
  return a + b - id;
}

MatrixXcd op_poisson_kernel_factored(const ContractionMatrix& t, cplx lambda) {
  check_lambda(lambda);
  const int n = t.dim();
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const MatrixXcd& m = t.entries();
  const MatrixXcd left = (id - std::conj(lambda) * m).partialPivLu().inverse();
  const MatrixXcd right = (id - lambda * m.adjoint()).partialPivLu().inverse();
  return left * (id - std::norm(lambda) * m * m.adjoint()) * right;
}

double positivity_certificate(const ContractionMatrix& t, cplx lambda, const VectorXcd& x) {
  check_vector(t, x);
  const cplx direct = x.dot(op_poisson_kernel(t, lambda) * x);
  const cplx factored = x.dot(op_poisson_kernel_factored(t, lambda) * x);
  if (std::abs(direct - factored) > 1e-10) {
    std::ostringstream msg;
    msg << "Poisson kernel formulas disagree: " << direct << " vs " << factored;
    throw ConsistencyError(msg.str());
  }
  if (direct.real() < -1e-12) {
    std::ostringstream msg;
    msg << "Poisson kernel quadratic form is negative: " << direct.real();
    throw ConsistencyError(msg.str());
  }
  return std::max(direct.real(), 0.0);
}

MomentSequence measure_moments(const ContractionMatrix& t, const VectorXcd& x, int n) {
  check_vector(t, x);
  if (n < 0) throw DomainError("moment count must be >= 0");
  MomentSequence out;
  VectorXcd power = x;
  for (int k = 0; k <= n; ++k) {
    out.positive_moments.push_back(x.dot(power));
    power = t.entries() * power;
  }
  out.positive_moments[0] = out.positive_moments[0].real();
  return out;
}

TInnerReport is_T_inner(const ContractionMatrix& t, const VectorXcd& x, int n, double tol) {
  check_vector(t, x);
  TInnerReport r;
  r.tolerance = tol;
  r.n_max = n;
  const UnitCheck unit = check_unit_norm(x.norm(), tol, "x");
  r.warnings = unit.warnings;
  r.moments = measure_moments(t, x / unit.norm, n);
  for (int k = 1; k <= n; ++k) {
    const double m = std::abs(r.moments.positive_moments[static_cast<size_t>(k)]);
    r.max_abs = std::max(r.max_abs, m);
    if (r.first_nonzero == 0 && m > tol) {
      r.first_nonzero = k;
      r.first_nonzero_magnitude = m;
    }
  }
  r.is_inner = r.first_nonzero == 0;
  r.note = "moments n = 1.." + std::to_string(n) +
           " checked; the verdict is the same for T and its adjoint";
  return r;
}

BilinearMoments bilinear_moments(const ContractionMatrix& t, const VectorXcd& x,
                                 const VectorXcd& y, int n) {
  check_vector(t, x);
  check_vector(t, y);
  BilinearMoments out;
  VectorXcd fwd = x;
  VectorXcd adj = x;
  for (int k = 0; k <= n; ++k) {
    out.forward.push_back(y.dot(fwd));
    out.adjoint.push_back(y.dot(adj));
    fwd = t.entries() * fwd;
    adj = t.entries().adjoint() * adj;
  }
  return out;
}

HerglotzConsistency herglotz_consistency(const ContractionMatrix& t, const VectorXcd& x,
                                         cplx lambda, int n) {
  HerglotzConsistency r;
  r.direct = positivity_certificate(t, lambda, x);
  if (t.norm() >= 1.0 - 1e-12 && std::abs(lambda) > 0.8) {
    r.skipped = true;
    r.consistent = true;
    return r;
  }
  for (;;) {
    const HerglotzValue h = poisson_eval_from_moments(measure_moments(t, x, n).to_fourier(), lambda);
    r.series = h.value;
    r.bound = h.truncation_bound;
    r.terms = n;
    if (h.truncation_bound <= 1e-10 || n >= 4096) break;
    n *= 2;
  }
  r.consistent = std::abs(r.series - r.direct) <= r.bound + 1e-10;
  return r;
}

}  // namespace hardy

#pragma once

#include <functional>
#include <vector>

#include "hardy/types.hpp"

namespace hardy {

// Anything that can be evaluated at a point of the closed disk or circle.
using BoundaryFn = std::function<cplx(cplx)>;

inline constexpr int kDefaultGridSize = 4096;

/// Samples of a function at the nodes exp(2 pi i k / size), k = 0..size-1.
/// Immutable once built; size is a power of two, at least 8.
class BoundaryGrid {
 public:
  // Validates the size and that every sample is finite.
  explicit BoundaryGrid(std::vector<cplx> samples);

  int size() const { return static_cast<int>(samples_.size()); }
  const std::vector<cplx>& samples() const { return samples_; }
  cplx operator[](int k) const { return samples_[static_cast<size_t>(k)]; }

  // Node exp(2 pi i k / size), built from the reduced angle so that the
  // quarter nodes are exact.
  cplx node(int k) const { return node(k, size()); }
  static cplx node(int k, int size);

  // Pointwise operations; both grids must have the same size.
  BoundaryGrid times(const BoundaryGrid& o) const;
  BoundaryGrid times_conj(const BoundaryGrid& o) const;
  BoundaryGrid abs_squared() const;
  BoundaryGrid map(const std::function<cplx(cplx)>& fn) const;
  double max_abs() const;

 private:
  std::vector<cplx> samples_;
};

bool is_valid_grid_size(int size);

/// Evaluates f at every grid node. A throwing or non-finite evaluation is
/// reported as a DomainError that names the node.
BoundaryGrid sample_boundary(const BoundaryFn& f, int size = kDefaultGridSize);

/// Fourier data coeff(n) for n in [-M, M], with coeff(n) = integral of
/// conj(xi)^n d(mu) for the measure h dm.
class FourierCoeffs {
 public:
  FourierCoeffs(int max_index, std::vector<cplx> values);

  int max_index() const { return max_index_; }
  // Zero outside [-M, M].
  cplx coeff(int n) const;
  double max_abs() const;
  // coeff(-n) == conj(coeff(n)) for every n, within tol.
  bool is_hermitian(double tol) const;

 private:
  int max_index_;
  std::vector<cplx> values_;  // values_[n + M]
};

/// Discrete Fourier coefficients (1/size) sum_k g_k exp(-2 pi i k n / size).
/// Requires 2M + 1 <= size.
FourierCoeffs fourier_coeffs(const BoundaryGrid& g, int max_index);

struct QuadratureValue {
  cplx value;
  int grid_size = 0;
};

/// Trapezoidal value of the H^2 inner product <f, g> = integral f conj(g) dm.
QuadratureValue h2_inner_product(const BoundaryGrid& f, const BoundaryGrid& g);
QuadratureValue h2_inner_product(const BoundaryFn& f, const BoundaryFn& g,
                                 int size = kDefaultGridSize);
// Mean of the samples, i.e. integral h dm.
QuadratureValue integrate(const BoundaryGrid& h);
double h2_norm(const BoundaryGrid& f);
double h2_norm(const BoundaryFn& f, int size = kDefaultGridSize);

/// Scalar Poisson kernel (1 - |lambda|^2) / |xi - lambda|^2.
double poisson_kernel(cplx lambda, cplx xi);

struct HerglotzValue {
  cplx value;
  // Bound on the neglected |n| > M terms, assuming |coeff(n)| never exceeds
  // the largest available coefficient (true for positive measures).
  double truncation_bound = 0.0;
  int terms = 0;
};

/// Truncated Herglotz sum coeff(0) + sum coeff(n) lambda^n
/// + sum coeff(-n) conj(lambda)^n, i.e. the Poisson integral of the measure.
HerglotzValue poisson_eval_from_moments(const FourierCoeffs& moments, cplx lambda);

}  // namespace hardy

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardy/boundary.hpp"
#include "hardy/types.hpp"

namespace hardy {

/// Dense square matrix with operator norm at most 1 (+1e-10).
class ContractionMatrix {
 public:
  explicit ContractionMatrix(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  double norm() const { return norm_; }

 private:
  Eigen::MatrixXcd entries_;
  double norm_ = 0.0;
};

/// <T^n x, x> for n = 0..N. The measure mu_{T,x} has Fourier coefficients
/// coeff(-n) = <T^n x, x> and coeff(n) = <T*^n x, x> = conj(<T^n x, x>).
struct MomentSequence {
  std::vector<cplx> positive_moments;

  int count() const { return static_cast<int>(positive_moments.size()) - 1; }
  FourierCoeffs to_fourier() const;
};

/// K_lambda(T) = (I - lambda T*)^{-1} + (I - conj(lambda) T)^{-1} - I.
Eigen::MatrixXcd op_poisson_kernel(const ContractionMatrix& t, cplx lambda);

/// (I - conj(lambda) T)^{-1} (I - |lambda|^2 T T*) (I - lambda T*)^{-1}.
Eigen::MatrixXcd op_poisson_kernel_factored(const ContractionMatrix& t, cplx lambda);

/// <K_lambda(T) x, x> from both formulas. Throws ConsistencyError when they
/// differ by more than 1e-10 or the value drops below -1e-12.
double positivity_certificate(const ContractionMatrix& t, cplx lambda,
                              const Eigen::VectorXcd& x);

MomentSequence measure_moments(const ContractionMatrix& t, const Eigen::VectorXcd& x, int n);

struct TInnerReport {
  bool is_inner = false;
  MomentSequence moments;
  int first_nonzero = 0;
  double first_nonzero_magnitude = 0.0;
  double max_abs = 0.0;
  double tolerance = 0.0;
  int n_max = 0;
  std::vector<std::string> warnings;
  std::string note;
};

/// Passes when |<T^n x, x>| <= tol for n = 1..N. The same verdict holds for
/// T*, since <T*^n x, x> is the conjugate moment.
TInnerReport is_T_inner(const ContractionMatrix& t, const Eigen::VectorXcd& x, int n,
                        double tol = 1e-9);

struct BilinearMoments {
  std::vector<cplx> forward;  // <T^n x, y>
  std::vector<cplx> adjoint;  // <T*^n x, y>
};

BilinearMoments bilinear_moments(const ContractionMatrix& t, const Eigen::VectorXcd& x,
                                 const Eigen::VectorXcd& y, int n);

struct HerglotzConsistency {
  double direct = 0.0;  // <K_lambda(T) x, x>
  cplx series;          // Herglotz sum of the moments
  double bound = 0.0;   // truncation bound of the series
  int terms = 0;
  bool skipped = false;  // isometry with |lambda| > 0.8
  bool consistent = false;
};

/// Compares the moment series against the kernel. N is doubled (up to 4096)
/// until the truncation bound is below 1e-10.
HerglotzConsistency herglotz_consistency(const ContractionMatrix& t, const Eigen::VectorXcd& x,
                                         cplx lambda, int n = 200);

}  // namespace hardy

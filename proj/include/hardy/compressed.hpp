#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardy/blaschke.hpp"
#include "hardy/boundary.hpp"
#include "hardy/model_space.hpp"
#include "hardy/op_poisson.hpp"

namespace hardy {

/// Symbol of a compressed Toeplitz operator.
struct Symbol {
  std::string description;
  BoundaryFn fn;
  // Set when the symbol is a finite Blaschke product.
  std::optional<BlaschkeProduct> inner;

  static Symbol from_blaschke(const BlaschkeProduct& b, std::string description = "");
  static Symbol from_hardy(const HardyFunction& f, std::string description = "");
};

/// phi(S_Theta) = P_Theta T_phi restricted to K_Theta, as a d x d matrix in
/// the TM basis of K_Theta: entry (i, j) = <phi F_j, F_i>.
struct CompressedOperator {
  BlaschkeProduct theta;
  Eigen::MatrixXcd matrix;
  Symbol symbol;
  int grid_size = 0;

  ContractionMatrix as_contraction() const { return ContractionMatrix(matrix); }
};

CompressedOperator compressed_shift_matrix(const BlaschkeProduct& theta,
                                           int grid_size = kDefaultGridSize);

CompressedOperator functional_calculus(const BlaschkeProduct& theta, const Symbol& phi,
                                       int grid_size = kDefaultGridSize);

/// phi(S_Theta)* = P_Theta T_{conj(phi)} on K_Theta, computed by quadrature
/// (not by transposing functional_calculus).
Eigen::MatrixXcd functional_calculus_adjoint(const BlaschkeProduct& theta, const Symbol& phi,
                                             int grid_size = kDefaultGridSize);

/// b(A) = c prod (A - a I)(I - conj(a) A)^{-1} for a matrix A with spectral
/// radius below 1.
Eigen::MatrixXcd blaschke_of_matrix(const BlaschkeProduct& b, const Eigen::MatrixXcd& a);

/// Orthonormal basis of ker phi(S_Theta)* from the singular vectors with
/// singular value below 1e-8. Throws AmbiguityError if a singular value
/// falls in [1e-8, 1e-6]. Requires an inner (finite Blaschke) symbol.
std::vector<ModelVector> kernel_of_adjoint(const CompressedOperator& op);

/// Default moment count for compressed-operator tests: 4 * degree(Theta).
int default_compressed_moments(const BlaschkeProduct& theta);

/// S_Theta-inner test on a unit vector of K_Theta (N <= 0 selects the default).
TInnerReport s_theta_inner_test(const BlaschkeProduct& theta, const ModelVector& f, int n = 0,
                                double tol = 1e-9);

struct VKphiReport {
  BlaschkeProduct quotient;       // I = Theta / phi
  double membership_residual = 0.0;  // ||v f - P_Theta(v f)||
  bool in_model_space = false;
  TInnerReport moments;
  bool passed = false;
};

/// For phi | Theta, v | Theta/phi and unit f in K_phi: forms v f, checks that
/// it lies in K_Theta and runs the phi(S_Theta)-inner moment test on it.
VKphiReport verify_vKphi_theorem(const BlaschkeProduct& theta, const BlaschkeProduct& phi,
                                 const BlaschkeProduct& v, const ModelVector& f, int n = 0,
                                 double tol = 1e-9, int grid_size = kDefaultGridSize);

}  // namespace hardy

#pragma once

#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/boundary.hpp"
#include "hardy/hardy_function.hpp"

namespace hardy {

/// Takenaka-Malmquist orthonormal basis of the model space K_u = (u H^2)^perp:
///
///   F_j(z) = sqrt(1 - |a_{j+1}|^2) / (1 - conj(a_{j+1}) z) * prod_{i<=j} b_{a_i}(z)
///
/// in the order of u's zero list.
struct TMBasis {
  BlaschkeProduct u;
  std::vector<HardyFunction> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
  // Samples of every basis function on one grid.
  std::vector<BoundaryGrid> sample(int grid_size = kDefaultGridSize) const;
};

TMBasis tm_basis(const BlaschkeProduct& u);

/// Element of K_u written in the TM basis of u.
struct ModelVector {
  BlaschkeProduct u;
  std::vector<cplx> coords;

  double norm() const;
  cplx operator()(cplx z) const;
  HardyFunction to_hardy() const;
  ModelVector normalized() const;
};

/// k_lambda(z) = (1 - conj(u(lambda)) u(z)) / (1 - conj(lambda) z), reduced.
/// The factor 1 - conj(lambda) z always cancels, leaving poles only at the
/// reflected zeros of u.
HardyFunction reproducing_kernel(const BlaschkeProduct& u, cplx lambda);

/// ||k_lambda||^2 = (1 - |u(lambda)|^2) / (1 - |lambda|^2).
double reproducing_kernel_norm_squared(const BlaschkeProduct& u, cplx lambda);

/// Orthogonal projection P_u f, coordinates <f, F_j> by quadrature.
ModelVector project(const BoundaryFn& f, const BlaschkeProduct& u,
                    int grid_size = kDefaultGridSize);

/// Residual norm ||f - P_u f|| on the grid.
double projection_residual(const BoundaryFn& f, const ModelVector& projected,
                           int grid_size = kDefaultGridSize);

/// Every inner divisor of Theta(z)/z, each with constant 1. Requires
/// Theta(0) = 0: those divisors are exactly the inner functions in K_Theta.
std::vector<BlaschkeProduct> inner_divisor_enumerate(const BlaschkeProduct& theta);

}  // namespace hardy

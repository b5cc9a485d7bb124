#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardy/blaschke.hpp"
#include "hardy/boundary.hpp"
#include "hardy/model_space.hpp"

namespace hardy {

/// f = F_0 + u F_1 + u^2 F_2 + ..., F_k in K_u, truncated at K_max.
///
/// coeffs(j, k) = <f, u^k F_j> with F_j the TM basis of K_u, so block k has
/// coordinates coeffs.col(k).
struct WoldExpansion {
  BlaschkeProduct u;
  int k_max = 0;
  Eigen::MatrixXcd coeffs;  // degree(u) x (k_max + 1)
  double norm_squared = 0.0;
  // ||f - sum_{k <= K_max} u^k F_k||, measured on the grid.
  double residual = 0.0;
  // Estimated sup-norm bound for the neglected tail of every branch function.
  double branch_tail_bound = 0.0;
  int grid_size = 0;

  ModelVector block(int k) const;
  std::vector<ModelVector> blocks() const;
  // ||f||^2 - sum |c_{j,k}|^2.
  double parseval_gap() const;
};

/// Expansion with a fixed truncation depth.
WoldExpansion wold_expand(const BoundaryFn& f, const BlaschkeProduct& u, int k_max,
                          int grid_size = kDefaultGridSize);

/// Expansion deepened until the reconstruction residual drops below
/// `residual_tol` or the depth reaches `max_depth`.
WoldExpansion wold_expand_adaptive(const BoundaryFn& f, const BlaschkeProduct& u,
                                   double residual_tol = 1e-12, int max_depth = 256,
                                   int grid_size = kDefaultGridSize);

/// f_j(z) = sum_k c_{j,k} z^k, so that f(z) = sum_j F_j(z) f_j(u(z)).
struct BranchFunctions {
  BlaschkeProduct u;
  std::vector<Polynomial> branches;
  double tail_bound = 0.0;

  // sum_j |f_j(w)|^2.
  double density(cplx w) const;
  // sum_j F_j(z) f_j(u(z)).
  cplx reconstruct(cplx z) const;
  // sum_j ||f_j||^2.
  double norm_squared() const;
};

BranchFunctions branch_functions(const WoldExpansion& w);

struct InnerTestReport {
  std::string method;
  bool is_inner = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // Truncation allowance added to the tolerance (0 for exact tests).
  double truncation_bound = 0.0;
  int grid_size = 0;
  int depth = 0;  // K_max, N_max or number of alpha samples
  std::vector<std::string> warnings;
  std::string note;
};

/// Branch-function test: sum_j |f_j(xi)|^2 == 1 on the circle.
InnerTestReport stessin_inner_test(const BoundaryFn& f, const BlaschkeProduct& u,
                                   int k_max = -1, int grid_size = kDefaultGridSize,
                                   double tol = 1e-9);

/// sum_j alpha_j u^j F_j with unit coefficient vector.
HardyFunction orthogonal_block_construct(const BlaschkeProduct& u,
                                         const std::vector<cplx>& alpha);

struct MomentReport {
  bool is_inner_up_to_n = false;
  std::vector<cplx> moments;  // moments[n-1] = integral phi^n |f|^2 dm
  int first_nonzero = 0;      // 0 when every moment is within tolerance
  double first_nonzero_magnitude = 0.0;
  double max_abs = 0.0;
  double tolerance = 0.0;
  int n_max = 0;
  int grid_size = 0;
  std::vector<std::string> warnings;
  std::string note;
};

inline constexpr int kDefaultMomentCount = 32;

/// Moments integral phi^n |f|^2 dm for n = 1..n_max. Passing is necessary
/// for T_phi-innerness; it is not sufficient on its own.
MomentReport moment_inner_test(const BoundaryGrid& f, const BoundaryGrid& phi,
                               int n_max = kDefaultMomentCount, double tol = 1e-9);
MomentReport moment_inner_test(const BoundaryFn& f, const BoundaryFn& phi,
                               int n_max = kDefaultMomentCount,
                               int grid_size = kDefaultGridSize, double tol = 1e-9);

struct WoldOrthogonalityReport {
  bool passed = false;
  std::vector<cplx> sums;  // sums[N-1] = sum_k <F_k, F_{N+k}>
  double max_abs = 0.0;
  double allowance = 0.0;
};

/// Checks sum_k <F_k, F_{N+k}> = 0 for N = 1..n_max.
WoldOrthogonalityReport wold_orthogonality_test(const WoldExpansion& w, int n_max,
                                                double tol = 1e-9);

}  // namespace hardy

#include "hardy/wold.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

namespace {

struct GridState {
  std::vector<cplx> f;
  std::vector<cplx> u;
  std::vector<std::vector<cplx>> basis;
};

GridState sample_all(const BoundaryFn& f, const BlaschkeProduct& u, int grid_size) {
  GridState s;
  s.f = sample_boundary(f, grid_size).samples();
  s.u = sample_boundary([&](cplx z) { return u(z); }, grid_size).samples();
  for (const BoundaryGrid& g : tm_basis(u).sample(grid_size)) s.basis.push_back(g.samples());
  return s;
}

double mean_abs2(const std::vector<cplx>& v) {
  double acc = 0.0;
  for (cplx c : v) acc += std::norm(c);
  return acc / double(v.size());
}

// Decay ratio of the block norms near the end of the expansion, used to turn
// the l2 residual into an l1 (sup-norm) tail estimate.
double tail_ratio(const Eigen::MatrixXcd& coeffs) {
  const int cols = static_cast<int>(coeffs.cols());
  double ratio = 0.0;
  for (int k = std::max(1, cols - 4); k < cols; ++k) {
    const double prev = coeffs.col(k - 1).norm();
    const double cur = coeffs.col(k).norm();
    if (prev > 1e-300 && cur > 1e-15) ratio = std::max(ratio, cur / prev);
  }
  return std::min(ratio, 0.999);
}

WoldExpansion expand(const BoundaryFn& f, const BlaschkeProduct& u, int fixed_depth,
                     double residual_tol, int max_depth, int grid_size) {
  if (u.degree() < 1) throw DomainError("Wold expansion needs a nonconstant u");
  const GridState s = sample_all(f, u, grid_size);
  const int d = u.degree();
  const size_t n = s.f.size();

  WoldExpansion w;
  w.u = u;
  w.grid_size = grid_size;
  w.norm_squared = mean_abs2(s.f);

  std::vector<std::vector<cplx>> cols;
  std::vector<cplx> u_pow(n, 1.0);
  std::vector<cplx> residual = s.f;
  const int limit = fixed_depth >= 0 ? fixed_depth : max_depth;
  int k = 0;
  for (;; ++k) {
    std::vector<cplx> col(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
      const std::vector<cplx>& v = s.basis[static_cast<size_t>(j)];
      cplx acc = 0.0;
      for (size_t i = 0; i < n; ++i) acc += s.f[i] * std::conj(u_pow[i] * v[i]);
      col[static_cast<size_t>(j)] = acc / double(n);
    }
    for (size_t i = 0; i < n; ++i) {
      cplx block = 0.0;
      for (int j = 0; j < d; ++j) block += col[static_cast<size_t>(j)] * s.basis[static_cast<size_t>(j)][i];
      residual[i] -= u_pow[i] * block;
      u_pow[i] *= s.u[i];
    }
    cols.push_back(std::move(col));
    w.residual = std::sqrt(mean_abs2(residual));
    if (k >= limit) break;
    if (fixed_depth < 0 && w.residual < residual_tol) break;
  }
  w.k_max = k;
  w.coeffs.resize(d, k + 1);
  for (int kk = 0; kk <= k; ++kk)
    for (int j = 0; j < d; ++j) w.coeffs(j, kk) = cols[static_cast<size_t>(kk)][static_cast<size_t>(j)];
  const double rho = tail_ratio(w.coeffs);
  w.branch_tail_bound = w.residual * std::sqrt((1.0 + rho) / (1.0 - rho));
  return w;
}

}  // namespace

ModelVector WoldExpansion::block(int k) const {
  ModelVector m{u, {}};
  for (int j = 0; j < coeffs.rows(); ++j) m.coords.push_back(coeffs(j, k));
  return m;
}

std::vector<ModelVector> WoldExpansion::blocks() const {
  std::vector<ModelVector> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(block(k));
  return out;
}

double WoldExpansion::parseval_gap() const { return norm_squared - coeffs.squaredNorm(); }

WoldExpansion wold_expand(const BoundaryFn& f, const BlaschkeProduct& u, int k_max,
                          int grid_size) {
  if (k_max < 0) throw DomainError("wold_expand needs K_max >= 0");
  return expand(f, u, k_max, 0.0, k_max, grid_size);
}

WoldExpansion wold_expand_adaptive(const BoundaryFn& f, const BlaschkeProduct& u,
                                   double residual_tol, int max_depth, int grid_size) {
  return expand(f, u, -1, residual_tol, max_depth, grid_size);
}

double BranchFunctions::density(cplx w) const {
  double s = 0.0;
  for (const Polynomial& p : branches) s += std::norm(p(w));
  return s;
}

cplx BranchFunctions::reconstruct(cplx z) const {
  const TMBasis b = tm_basis(u);
  const cplx uz = u(z);
  cplx acc = 0.0;
  for (size_t j = 0; j < branches.size(); ++j) acc += b.basis[j](z) * branches[j](uz);
  return acc;
}

double BranchFunctions::norm_squared() const {
  double s = 0.0;
  for (const Polynomial& p : branches)
    for (cplx c : p.coeffs()) s += std::norm(c);
  return s;
}

BranchFunctions branch_functions(const WoldExpansion& w) {
  BranchFunctions out{w.u, {}, w.branch_tail_bound};
  for (int j = 0; j < w.coeffs.rows(); ++j) {
    std::vector<cplx> c(static_cast<size_t>(w.coeffs.cols()));
    for (int k = 0; k < w.coeffs.cols(); ++k) c[static_cast<size_t>(k)] = w.coeffs(j, k);
    out.branches.emplace_back(std::move(c));
  }
  return out;
}

InnerTestReport stessin_inner_test(const BoundaryFn& f, const BlaschkeProduct& u, int k_max,
                                   int grid_size, double tol) {
  const WoldExpansion w = k_max < 0 ? wold_expand_adaptive(f, u, 1e-12, 256, grid_size)
                                    : wold_expand(f, u, k_max, grid_size);
  InnerTestReport r;
  r.method = "stessin";
  r.tolerance = tol;
  r.grid_size = grid_size;
  r.depth = w.k_max;
  const UnitCheck unit = check_unit_norm(std::sqrt(w.norm_squared), tol, "f");
  r.warnings = unit.warnings;
  const double scale = 1.0 / w.norm_squared;

  const BranchFunctions b = branch_functions(w);
  double max_density = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    const double s = b.density(BoundaryGrid::node(k, grid_size)) * scale;
    max_density = std::max(max_density, s);
    r.max_deviation = std::max(r.max_deviation, std::abs(s - 1.0));
  }
  const double tail = b.tail_bound * std::sqrt(scale);
  r.truncation_bound = 2.0 * std::sqrt(max_density) * tail + tail * tail;
  r.is_inner = r.max_deviation <= tol + r.truncation_bound;
  r.note = "max over the grid of |sum_j |f_j(xi)|^2 - 1|, branch functions truncated at K_max";
  return r;
}

HardyFunction orthogonal_block_construct(const BlaschkeProduct& u,
                                         const std::vector<cplx>& alpha) {
  if (static_cast<int>(alpha.size()) != u.degree()) {
    throw DomainError("need one coefficient per basis vector of K_u");
  }
  double n2 = 0.0;
  for (cplx a : alpha) n2 += std::norm(a);
  const UnitCheck unit = check_unit_norm(std::sqrt(n2), 0.0, "coefficient vector");
  const double scale = 1.0 / unit.norm;
  const TMBasis b = tm_basis(u);
  const HardyFunction uh = u.as_hardy();
  HardyFunction acc = HardyFunction::constant(0.0);
  HardyFunction u_pow = HardyFunction::constant(1.0);
  for (int j = 0; j < u.degree(); ++j) {
    acc = acc + u_pow * b.basis[static_cast<size_t>(j)] * (alpha[static_cast<size_t>(j)] * scale);
    u_pow = u_pow * uh;
  }
  return acc;
}

MomentReport moment_inner_test(const BoundaryGrid& f, const BoundaryGrid& phi, int n_max,
                               double tol) {
  if (f.size() != phi.size()) throw DomainError("moment test: grid size mismatch");
  if (n_max < 1) throw DomainError("moment test needs n_max >= 1");
  MomentReport r;
  r.tolerance = tol;
  r.n_max = n_max;
  r.grid_size = f.size();
  const BoundaryGrid weight = f.abs_squared();
  const double norm2 = integrate(weight).value.real();
  if (norm2 <= 0.0) throw NonUnitVector("f vanishes on the grid");
  if (std::abs(std::sqrt(norm2) - 1.0) > kUnitRescaleTol) {
    r.warnings.push_back("f has norm " + std::to_string(std::sqrt(norm2)) +
                         "; moments are normalized by ||f||^2");
  }
  std::vector<cplx> phi_pow(static_cast<size_t>(f.size()), 1.0);
  for (int n = 1; n <= n_max; ++n) {
    cplx acc = 0.0;
    for (int k = 0; k < f.size(); ++k) {
      phi_pow[static_cast<size_t>(k)] *= phi[k];
      acc += phi_pow[static_cast<size_t>(k)] * weight[k];
    }
    const cplx m = acc / double(f.size()) / norm2;
    r.moments.push_back(m);
    r.max_abs = std::max(r.max_abs, std::abs(m));
    if (r.first_nonzero == 0 && std::abs(m) > tol) {
      r.first_nonzero = n;
      r.first_nonzero_magnitude = std::abs(m);
    }
  }
  r.is_inner_up_to_n = r.first_nonzero == 0;
  r.note = "necessary condition only: moments n = 1.." + std::to_string(n_max) + " checked";
  return r;
}

MomentReport moment_inner_test(const BoundaryFn& f, const BoundaryFn& phi, int n_max,
                               int grid_size, double tol) {
  return moment_inner_test(sample_boundary(f, grid_size), sample_boundary(phi, grid_size),
                           n_max, tol);
}

WoldOrthogonalityReport wold_orthogonality_test(const WoldExpansion& w, int n_max,
                                                double tol) {
  WoldOrthogonalityReport r;
  const double norm2 = w.norm_squared;
  if (norm2 <= 0.0) throw NonUnitVector("expansion of the zero vector");
  r.allowance = tol + std::sqrt(norm2) * w.residual / norm2;
  const int cols = static_cast<int>(w.coeffs.cols());
  for (int shift = 1; shift <= n_max; ++shift) {
    cplx s = 0.0;
    // <F_k, F_{k+N}> = sum_j c_{j,k} conj(c_{j,k+N}); Eigen's dot conjugates the left side.
    for (int k = 0; k + shift < cols; ++k) s += w.coeffs.col(k + shift).dot(w.coeffs.col(k));
    s /= norm2;
    r.sums.push_back(s);
    r.max_abs = std::max(r.max_abs, std::abs(s));
  }
  r.passed = r.max_abs <= r.allowance;
  return r;
}

}  // namespace hardy

#include "hardy/compressed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

constexpr double kNullThreshold = 1e-8;
constexpr double kRankGapTop = 1e-6;

std::string describe(const BlaschkeProduct& b) {
  std::ostringstream out;
  out << "Blaschke(constant=" << b.constant() << ", zeros=[";
  for (size_t i = 0; i < b.zeros().size(); ++i) out << (i ? ", " : "") << b.zeros()[i];
  out << "])";
  return out.str();
}

// <phi F_j, F_i>, or <conj(phi) F_j, F_i> when `conjugate` is set.
Eigen::MatrixXcd compress(const BlaschkeProduct& theta, const BoundaryFn& phi, bool conjugate,
                          int grid_size) {
  const int d = theta.degree();
  const std::vector<BoundaryGrid> basis = tm_basis(theta).sample(grid_size);
  BoundaryGrid phis = sample_boundary(phi, grid_size);
  if (conjugate) phis = phis.map([](cplx c) { return std::conj(c); });
  Eigen::MatrixXcd m(d, d);
  for (int j = 0; j < d; ++j) {
    const BoundaryGrid image = phis.times(basis[static_cast<size_t>(j)]);
    for (int i = 0; i < d; ++i) m(i, j) = h2_inner_product(image, basis[static_cast<size_t>(i)]).value;
  }
  return m;
}

}  // namespace

Symbol Symbol::from_blaschke(const BlaschkeProduct& b, std::string description) {
  return {description.empty() ? describe(b) : std::move(description),
          [b](cplx z) { return b(z); }, b};
}

Symbol Symbol::from_hardy(const HardyFunction& f, std::string description) {
  return {description.empty() ? "rational symbol" : std::move(description),
          [f](cplx z) { return f(z); }, std::nullopt};
}

CompressedOperator compressed_shift_matrix(const BlaschkeProduct& theta, int grid_size) {
  return functional_calculus(theta, Symbol::from_blaschke(BlaschkeProduct::z_power(1), "z"),
                             grid_size);
}

CompressedOperator functional_calculus(const BlaschkeProduct& theta, const Symbol& phi,
                                       int grid_size) {
  if (theta.degree() < 1) throw DomainError("compressed operators need degree(Theta) >= 1");
  return {theta, compress(theta, phi.fn, false, grid_size), phi, grid_size};
}

Eigen::MatrixXcd functional_calculus_adjoint(const BlaschkeProduct& theta, const Symbol& phi,
                                             int grid_size) {
  if (theta.degree() < 1) throw DomainError("compressed operators need degree(Theta) >= 1");
  return compress(theta, phi.fn, true, grid_size);
}

Eigen::MatrixXcd blaschke_of_matrix(const BlaschkeProduct& b, const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw DomainError("blaschke_of_matrix needs a square matrix");
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd out = b.constant() * id;
  for (cplx z : b.zeros()) {
    out = out * (a - z * id) * (id - std::conj(z) * a).partialPivLu().inverse();
  }
  return out;
}

std::vector<ModelVector> kernel_of_adjoint(const CompressedOperator& op) {
  if (!op.symbol.inner) throw DomainError("kernel_of_adjoint needs an inner symbol");
  const Eigen::MatrixXcd adj = op.matrix.adjoint();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(adj, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const int d = static_cast<int>(adj.cols());
  int rank = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) >= kNullThreshold && s(i) <= kRankGapTop) {
      std::ostringstream msg;
      msg << "ambiguous rank: singular value " << s(i) << " inside [1e-8, 1e-6]";
      throw AmbiguityError(msg.str());
    }
    if (s(i) > kRankGapTop) ++rank;
  }
  if (rank > 0 && rank < d && s(rank - 1) < 100.0 * s(rank)) {
    throw AmbiguityError("singular-value gap below the required factor 100");
  }
  std::vector<ModelVector> out;
  for (int c = rank; c < d; ++c) {
    ModelVector m{op.theta, {}};
    for (int i = 0; i < d; ++i) m.coords.push_back(svd.matrixV()(i, c));
    out.push_back(std::move(m));
  }
  return out;
}

int default_compressed_moments(const BlaschkeProduct& theta) { return 4 * theta.degree(); }

TInnerReport s_theta_inner_test(const BlaschkeProduct& theta, const ModelVector& f, int n,
                                double tol) {
  if (static_cast<int>(f.coords.size()) != theta.degree()) {
    throw DomainError("vector is not expressed in the TM basis of K_Theta");
  }
  const CompressedOperator s = compressed_shift_matrix(theta);
  const Eigen::Map<const Eigen::VectorXcd> x(f.coords.data(), static_cast<Eigen::Index>(f.coords.size()));
  return is_T_inner(s.as_contraction(), x, n > 0 ? n : default_compressed_moments(theta), tol);
}

VKphiReport verify_vKphi_theorem(const BlaschkeProduct& theta, const BlaschkeProduct& phi,
                                 const BlaschkeProduct& v, const ModelVector& f, int n,
                                 double tol, int grid_size) {
  if (!divides(phi, theta)) throw DomainError("hypothesis failed: phi does not divide Theta");
  VKphiReport r;
  r.quotient = quotient(theta, phi);
  if (!divides(v, r.quotient)) throw DomainError("hypothesis failed: v does not divide I = Theta/phi");
  if (static_cast<int>(f.coords.size()) != phi.degree()) {
    throw DomainError("f must be given in the TM basis of K_phi");
  }
  const HardyFunction vf = v.as_hardy() * f.normalized().to_hardy();
  const ModelVector p = project(vf, theta, grid_size);
  r.membership_residual = projection_residual(vf, p, grid_size);
  r.in_model_space = r.membership_residual <= tol;
  const CompressedOperator op = functional_calculus(theta, Symbol::from_blaschke(phi), grid_size);
  const Eigen::Map<const Eigen::VectorXcd> x(p.coords.data(), static_cast<Eigen::Index>(p.coords.size()));
  r.moments = is_T_inner(op.as_contraction(), x, n > 0 ? n : default_compressed_moments(theta), tol);
  r.passed = r.in_model_space && r.moments.is_inner;
  return r;
}

}  // namespace hardy

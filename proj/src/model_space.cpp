#include "hardy/model_space.hpp"

#include <cmath>

namespace hardy {

TMBasis tm_basis(const BlaschkeProduct& u) {
  if (u.degree() < 1) throw DomainError("model space of a constant is {0}");
  TMBasis out{u, {}};
  HardyFunction prefix = HardyFunction::constant(1.0);
  for (int j = 0; j < u.degree(); ++j) {
    const cplx a = u.zeros()[static_cast<size_t>(j)];
    const HardyFunction head(Polynomial::constant(std::sqrt(1.0 - std::norm(a))),
                             {std::conj(a)});
    out.basis.push_back(head * prefix);
    prefix = prefix * BlaschkeProduct::factor(a).as_hardy();
  }
  return out;
}

std::vector<BoundaryGrid> TMBasis::sample(int grid_size) const {
  std::vector<BoundaryGrid> out;
  out.reserve(basis.size());
  for (const HardyFunction& f : basis) out.push_back(sample_boundary(f, grid_size));
  return out;
}

double ModelVector::norm() const {
  double s = 0.0;
  for (cplx c : coords) s += std::norm(c);
  return std::sqrt(s);
}

cplx ModelVector::operator()(cplx z) const { return to_hardy()(z); }

HardyFunction ModelVector::to_hardy() const {
  const TMBasis b = tm_basis(u);
  HardyFunction acc = HardyFunction::constant(0.0);
  for (size_t j = 0; j < coords.size(); ++j) acc = acc + b.basis[j] * coords[j];
  return acc;
}

ModelVector ModelVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NonUnitVector("cannot normalize the zero vector");
  ModelVector out = *this;
  for (cplx& c : out.coords) c /= n;
  return out;
}

HardyFunction reproducing_kernel(const BlaschkeProduct& u, cplx lambda) {
  if (!(std::abs(lambda) < 1.0)) throw DomainError("reproducing kernel needs |lambda| < 1");
  const cplx ul_bar = std::conj(u(lambda));
  // (den_u - conj(u(lambda)) num_u) / (den_u (1 - conj(lambda) z)).
  Polynomial num = u.denominator() - u.numerator() * ul_bar;
  std::vector<cplx> params;
  for (cplx a : u.zeros()) params.push_back(std::conj(a));
  params.push_back(std::conj(lambda));
  return HardyFunction(std::move(num), std::move(params));
}

double reproducing_kernel_norm_squared(const BlaschkeProduct& u, cplx lambda) {
  return (1.0 - std::norm(u(lambda))) / (1.0 - std::norm(lambda));
}

ModelVector project(const BoundaryFn& f, const BlaschkeProduct& u, int grid_size) {
  const BoundaryGrid fs = sample_boundary(f, grid_size);
  const TMBasis b = tm_basis(u);
  ModelVector out{u, {}};
  for (const BoundaryGrid& fj : b.sample(grid_size)) {
    out.coords.push_back(h2_inner_product(fs, fj).value);
  }
  return out;
}

double projection_residual(const BoundaryFn& f, const ModelVector& projected, int grid_size) {
  const HardyFunction p = projected.to_hardy();
  return h2_norm([&](cplx z) { return f(z) - p(z); }, grid_size);
}

std::vector<BlaschkeProduct> inner_divisor_enumerate(const BlaschkeProduct& theta) {
  if (std::abs(theta(0.0)) > kRootMatchTol) {
    throw DomainError(
        "K_Theta contains inner functions only when Theta(0) = 0; this Theta has no zero at 0");
  }
  // Remove one zero at the origin; the rest are the zeros of Theta(z)/z.
  std::vector<cplx> rest = theta.zeros();
  for (auto it = rest.begin(); it != rest.end(); ++it) {
    if (std::abs(*it) <= kRootMatchTol) {
      rest.erase(it);
      break;
    }
  }
  // Group equal zeros so that each divisor appears once.
  std::vector<std::pair<cplx, int>> groups;
  for (cplx a : rest) {
    bool found = false;
    for (auto& [z, m] : groups) {
      if (std::abs(z - a) <= kRootMatchTol) {
        ++m;
        found = true;
        break;
      }
    }
    if (!found) groups.emplace_back(a, 1);
  }
  std::vector<BlaschkeProduct> out;
  std::vector<int> mult(groups.size(), 0);
  while (true) {
    std::vector<cplx> zeros;
    for (size_t g = 0; g < groups.size(); ++g)
      for (int k = 0; k < mult[g]; ++k) zeros.push_back(groups[g].first);
    out.emplace_back(std::move(zeros));
    // Odometer over multiplicities 0..m_g.
    size_t g = 0;
    while (g < groups.size() && mult[g] == groups[g].second) mult[g++] = 0;
    if (g == groups.size()) break;
    ++mult[g];
  }
  return out;
}

}  // namespace hardy

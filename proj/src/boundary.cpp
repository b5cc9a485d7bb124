#include "hardy/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

bool is_valid_grid_size(int size) {
  return size >= 8 && (size & (size - 1)) == 0;
}

BoundaryGrid::BoundaryGrid(std::vector<cplx> samples) : samples_(std::move(samples)) {
  if (!is_valid_grid_size(size())) {
    throw DomainError("grid size must be a power of two >= 8, got " +
                      std::to_string(samples_.size()));
  }
  for (size_t k = 0; k < samples_.size(); ++k) {
    if (!std::isfinite(samples_[k].real()) || !std::isfinite(samples_[k].imag())) {
      throw DomainError("non-finite grid sample at index " + std::to_string(k));
    }
  }
}

cplx BoundaryGrid::node(int k, int size) {
  k %= size;
  if (k < 0) k += size;
  if (4 * k == size) return {0.0, 1.0};
  if (2 * k == size) return {-1.0, 0.0};
  if (4 * k == 3 * size) return {0.0, -1.0};
  return unimodular(kTwoPi * k / size);
}

BoundaryGrid BoundaryGrid::times(const BoundaryGrid& o) const {
  if (o.size() != size()) throw DomainError("grid size mismatch");
  std::vector<cplx> v(samples_.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = samples_[k] * o.samples_[k];
  return BoundaryGrid(std::move(v));
}

BoundaryGrid BoundaryGrid::times_conj(const BoundaryGrid& o) const {
  if (o.size() != size()) throw DomainError("grid size mismatch");
  std::vector<cplx> v(samples_.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = samples_[k] * std::conj(o.samples_[k]);
  return BoundaryGrid(std::move(v));
}

BoundaryGrid BoundaryGrid::abs_squared() const {
  std::vector<cplx> v(samples_.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = std::norm(samples_[k]);
  return BoundaryGrid(std::move(v));
}

BoundaryGrid BoundaryGrid::map(const std::function<cplx(cplx)>& fn) const {
  std::vector<cplx> v(samples_.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = fn(samples_[k]);
  return BoundaryGrid(std::move(v));
}

double BoundaryGrid::max_abs() const {
  double m = 0.0;
  for (cplx c : samples_) m = std::max(m, std::abs(c));
  return m;
}

BoundaryGrid sample_boundary(const BoundaryFn& f, int size) {
  if (!is_valid_grid_size(size)) {
    throw DomainError("grid size must be a power of two >= 8, got " +
                      std::to_string(size));
  }
  std::vector<cplx> v(static_cast<size_t>(size));
  for (int k = 0; k < size; ++k) {
    const cplx xi = BoundaryGrid::node(k, size);
    cplx value;
    try {
      value = f(xi);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "evaluation failed at grid node " << k << " (xi = " << xi << "): " << e.what();
      throw DomainError(msg.str());
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      std::ostringstream msg;
      msg << "non-finite value at grid node " << k << " (xi = " << xi << ")";
      throw DomainError(msg.str());
    }
    v[static_cast<size_t>(k)] = value;
  }
  return BoundaryGrid(std::move(v));
}

FourierCoeffs::FourierCoeffs(int max_index, std::vector<cplx> values)
    : max_index_(max_index), values_(std::move(values)) {
  if (max_index_ < 0 || values_.size() != static_cast<size_t>(2 * max_index_ + 1)) {
    throw DomainError("FourierCoeffs needs exactly 2M+1 values");
  }
}

cplx FourierCoeffs::coeff(int n) const {
  if (n < -max_index_ || n > max_index_) return 0.0;
  return values_[static_cast<size_t>(n + max_index_)];
}

double FourierCoeffs::max_abs() const {
  double m = 0.0;
  for (cplx c : values_) m = std::max(m, std::abs(c));
  return m;
}

bool FourierCoeffs::is_hermitian(double tol) const {
  for (int n = 0; n <= max_index_; ++n) {
    if (std::abs(coeff(-n) - std::conj(coeff(n))) > tol) return false;
  }
  return true;
}

FourierCoeffs fourier_coeffs(const BoundaryGrid& g, int max_index) {
  const int size = g.size();
  if (max_index < 0 || 2 * max_index + 1 > size) {
    throw DomainError("fourier_coeffs: 2M+1 = " + std::to_string(2 * max_index + 1) +
                      " exceeds grid size " + std::to_string(size));
  }
  std::vector<cplx> nodes(static_cast<size_t>(size));
  for (int k = 0; k < size; ++k) nodes[static_cast<size_t>(k)] = BoundaryGrid::node(k, size);
  std::vector<cplx> out(static_cast<size_t>(2 * max_index + 1));
  for (int n = -max_index; n <= max_index; ++n) {
    cplx acc = 0.0;
    // exp(-2 pi i k n / size) is the node with index -k n (mod size).
    for (int k = 0; k < size; ++k) {
      long long idx = (-static_cast<long long>(k) * n) % size;
      if (idx < 0) idx += size;
      acc += g[k] * nodes[static_cast<size_t>(idx)];
    }
    out[static_cast<size_t>(n + max_index)] = acc / double(size);
  }
  return FourierCoeffs(max_index, std::move(out));
}

QuadratureValue integrate(const BoundaryGrid& h) {
  cplx acc = 0.0;
  for (cplx c : h.samples()) acc += c;
  return {acc / double(h.size()), h.size()};
}

QuadratureValue h2_inner_product(const BoundaryGrid& f, const BoundaryGrid& g) {
  return integrate(f.times_conj(g));
}

QuadratureValue h2_inner_product(const BoundaryFn& f, const BoundaryFn& g, int size) {
  return h2_inner_product(sample_boundary(f, size), sample_boundary(g, size));
}

double h2_norm(const BoundaryGrid& f) {
  double acc = 0.0;
  for (cplx c : f.samples()) acc += std::norm(c);
  return std::sqrt(acc / f.size());
}

double h2_norm(const BoundaryFn& f, int size) { return h2_norm(sample_boundary(f, size)); }

double poisson_kernel(cplx lambda, cplx xi) {
  return (1.0 - std::norm(lambda)) / std::norm(xi - lambda);
}

HerglotzValue poisson_eval_from_moments(const FourierCoeffs& moments, cplx lambda) {
  const double r = std::abs(lambda);
  if (!(r < 1.0)) throw DomainError("Herglotz sum needs |lambda| < 1");
  const int m = moments.max_index();
  cplx acc = moments.coeff(0);
  cplx lam_pow = 1.0;
  cplx lam_bar_pow = 1.0;
  for (int n = 1; n <= m; ++n) {
    lam_pow *= lambda;
    lam_bar_pow *= std::conj(lambda);
    acc += moments.coeff(n) * lam_pow + moments.coeff(-n) * lam_bar_pow;
  }
  HerglotzValue out;
  out.value = acc;
  out.terms = m;
  // Two one-sided geometric tails.
  out.truncation_bound = 2.0 * std::pow(r, m + 1) * moments.max_abs() / (1.0 - r);
  return out;
}

}  // namespace hardy

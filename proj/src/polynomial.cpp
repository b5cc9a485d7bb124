#include "hardy/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace hardy {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

Polynomial Polynomial::monomial(int degree, cplx c) {
  std::vector<cplx> v(static_cast<size_t>(degree) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const cplx> roots) {
  std::vector<cplx> v{1.0};
  for (cplx r : roots) {
    std::vector<cplx> next(v.size() + 1, 0.0);
    for (size_t k = 0; k < v.size(); ++k) {
      next[k + 1] += v[k];
      next[k] -= r * v[k];
    }
    v = std::move(next);
  }
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  double scale = 0.0;
  for (cplx c : coeffs_) scale = std::max(scale, std::abs(c));
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= 1e-15 * scale) {
    coeffs_.pop_back();
  }
  if (coeffs_.size() == 1 && std::abs(coeffs_[0]) == 0.0) coeffs_[0] = 0.0;
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial();
  std::vector<cplx> v(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * double(k);
  return Polynomial(std::move(v));
}

double Polynomial::l1_norm() const {
  double s = 0.0;
  for (cplx c : coeffs_) s += std::abs(c);
  return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> v(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
  for (size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o * cplx{-1.0};
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<cplx> v(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> v = coeffs_;
  for (cplx& c : v) c *= s;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, cplx> Polynomial::divide_one_minus(cplx c) const {
  const int n = degree();
  if (n == 0) return {Polynomial(), coeffs_[0]};
  // p = (1 - c z) q with deg q = n - 1; the top equation is the remainder.
  std::vector<cplx> q(static_cast<size_t>(n));
  q[0] = coeffs_[0];
  for (int k = 1; k < n; ++k) q[k] = coeffs_[k] + c * q[k - 1];
  const cplx rem = coeffs_[n] + c * q[n - 1];
  return {Polynomial(std::move(q)), rem};
}

std::vector<cplx> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) throw DomainError("roots() needs a polynomial of degree >= 1");
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const cplx lead = coeffs_[n];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error("companion eigen-solve failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<cplx>(ev.data(), ev.data() + n);
}

}  // namespace hardy

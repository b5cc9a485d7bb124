#include "hardy/hardy_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

constexpr double kPoleMargin = 1e-12;
constexpr double kReduceTol = 1e-10;

// Splits two multisets into the parts left over after greedy matching.
void unmatched(const std::vector<cplx>& a, const std::vector<cplx>& b,
               std::vector<cplx>& only_a, std::vector<cplx>& only_b) {
  std::vector<bool> used(b.size(), false);
  only_a.clear();
  for (cplx x : a) {
    int best = -1;
    double best_d = kRootMatchTol;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used[static_cast<size_t>(best)] = true;
    } else {
      only_a.push_back(x);
    }
  }
  only_b.clear();
  for (size_t j = 0; j < b.size(); ++j)
    if (!used[j]) only_b.push_back(b[j]);
}

Polynomial factor_product(const std::vector<cplx>& params) {
  Polynomial p = Polynomial::constant(1.0);
  for (cplx c : params) p = p * Polynomial({1.0, -c});
  return p;
}

}  // namespace

HardyFunction::HardyFunction(Polynomial numerator) : numerator_(std::move(numerator)) {}

HardyFunction::HardyFunction(Polynomial numerator, std::vector<cplx> pole_params)
    : numerator_(std::move(numerator)), pole_params_(std::move(pole_params)) {
  validate_and_reduce();
}

HardyFunction HardyFunction::from_coefficients(const std::vector<cplx>& numerator,
                                               const std::vector<cplx>& denominator) {
  Polynomial den(denominator);
  if (den.is_zero()) throw DomainError("denominator is identically zero");
  const cplx d0 = den[0];
  if (std::abs(d0) == 0.0) throw DomainError("denominator vanishes at z = 0");
  std::vector<cplx> params;
  if (den.degree() >= 1) {
    for (cplx r : den.roots()) {
      if (!(std::abs(r) > 1.0 + kPoleMargin)) {
        std::ostringstream msg;
        msg << "pole " << r << " is not outside the closed unit disk";
        throw DomainError(msg.str());
      }
      params.push_back(1.0 / r);
    }
  }
  return HardyFunction(Polynomial(numerator) * (1.0 / d0), std::move(params));
}

void HardyFunction::validate_and_reduce() {
  std::vector<cplx> kept;
  for (cplx c : pole_params_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("non-finite pole parameter");
    }
    if (c == 0.0) continue;  // trivial factor
    if (!(std::abs(c) * (1.0 + kPoleMargin) < 1.0)) {
      std::ostringstream msg;
      msg << "pole " << 1.0 / c << " is not outside the closed unit disk";
      throw DomainError(msg.str());
    }
    kept.push_back(c);
  }
  pole_params_.clear();
  if (numerator_.is_zero()) return;
  // Cancel every factor (1 - c z) that divides the numerator.
  for (cplx c : kept) {
    auto [q, rem] = numerator_.divide_one_minus(c);
    if (std::abs(rem) <= kReduceTol * numerator_.l1_norm()) {
      numerator_ = q;
    } else {
      pole_params_.push_back(c);
    }
  }
}

Polynomial HardyFunction::denominator() const { return factor_product(pole_params_); }

std::vector<cplx> HardyFunction::poles() const {
  std::vector<cplx> out;
  for (cplx c : pole_params_) out.push_back(1.0 / c);
  return out;
}

cplx HardyFunction::operator()(cplx z) const {
  cplx den = 1.0;
  for (cplx c : pole_params_) den *= (1.0 - c * z);
  return numerator_(z) / den;
}

HardyFunction HardyFunction::operator+(const HardyFunction& o) const {
  std::vector<cplx> only_this, only_other;
  unmatched(pole_params_, o.pole_params_, only_this, only_other);
  Polynomial num = numerator_ * factor_product(only_other) +
                   o.numerator_ * factor_product(only_this);
  std::vector<cplx> params = pole_params_;
  params.insert(params.end(), only_other.begin(), only_other.end());
  return HardyFunction(std::move(num), std::move(params));
}

HardyFunction HardyFunction::operator-(const HardyFunction& o) const {
  return *this + o * cplx{-1.0};
}

HardyFunction HardyFunction::operator*(const HardyFunction& o) const {
  std::vector<cplx> params = pole_params_;
  params.insert(params.end(), o.pole_params_.begin(), o.pole_params_.end());
  return HardyFunction(numerator_ * o.numerator_, std::move(params));
}

HardyFunction HardyFunction::operator*(cplx s) const {
  HardyFunction out = *this;
  out.numerator_ = numerator_ * s;
  if (out.numerator_.is_zero()) out.pole_params_.clear();
  return out;
}

HardyFunction HardyFunction::pow(int n) const {
  if (n < 0) throw DomainError("negative power of a HardyFunction");
  HardyFunction out = HardyFunction::constant(1.0);
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

}  // namespace hardy

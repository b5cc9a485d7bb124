#include "hardy/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

constexpr double kZeroMargin = 1e-12;
constexpr double kLevelSetResidual = 1e-10;
constexpr int kPolishSteps = 3;

struct ZeroMatch {
  std::vector<cplx> common;
  std::vector<cplx> only_first;
  std::vector<cplx> only_second;
};

// Greedy closest-pair matching of two zero multisets. Pairs that sit just
// outside the tolerance make the decision unsafe, so they are rejected.
ZeroMatch match_zeros(const std::vector<cplx>& first, const std::vector<cplx>& second) {
  ZeroMatch out;
  std::vector<bool> used(second.size(), false);
  for (cplx a : first) {
    int best = -1;
    double best_d = kRootMatchTol;
    for (size_t j = 0; j < second.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(a - second[j]);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used[static_cast<size_t>(best)] = true;
      out.common.push_back(a);
    } else {
      out.only_first.push_back(a);
    }
  }
  for (size_t j = 0; j < second.size(); ++j)
    if (!used[j]) out.only_second.push_back(second[j]);

  for (cplx a : out.only_first) {
    for (cplx b : out.only_second) {
      const double d = std::abs(a - b);
      if (d > kRootMatchTol && d <= 2.0 * kRootMatchTol) {
        std::ostringstream msg;
        msg << "zeros " << a << " and " << b << " are too close to decide whether they coincide";
        throw AmbiguityError(msg.str());
      }
    }
  }
  return out;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx constant)
    : constant_(constant), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(constant_) - 1.0) > 1e-14) {
    std::ostringstream msg;
    msg << "Blaschke constant " << constant_ << " is not unimodular";
    throw DomainError(msg.str());
  }
  constant_ /= std::abs(constant_);
  for (cplx a : zeros_) {
    if (!(std::abs(a) < 1.0 - kZeroMargin)) {
      std::ostringstream msg;
      msg << "Blaschke zero " << a << " is not inside the open unit disk";
      throw DomainError(msg.str());
    }
  }
}

BlaschkeProduct BlaschkeProduct::z_power(int n) {
  if (n < 0) throw DomainError("z_power needs n >= 0");
  return BlaschkeProduct(std::vector<cplx>(static_cast<size_t>(n), 0.0));
}

BlaschkeProduct BlaschkeProduct::factor(cplx a) { return BlaschkeProduct({a}); }

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx acc = constant_;
  for (cplx a : zeros_) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  double nearest = 1.0;
  for (cplx a : zeros_) nearest = std::min(nearest, std::abs(z - a));
  if (nearest > 1e-8) {
    // Logarithmic derivative: u'/u = sum (1 - |a|^2) / ((z - a)(1 - conj(a) z)).
    cplx s = 0.0;
    for (cplx a : zeros_) s += 1.0 / (z - a) + std::conj(a) / (1.0 - std::conj(a) * z);
    return (*this)(z) * s;
  }
  // Product rule, safe at the zeros.
  cplx total = 0.0;
  for (size_t j = 0; j < zeros_.size(); ++j) {
    const cplx a = zeros_[j];
    const cplx den = 1.0 - std::conj(a) * z;
    cplx term = (1.0 - std::norm(a)) / (den * den);
    for (size_t i = 0; i < zeros_.size(); ++i) {
      if (i == j) continue;
      term *= (z - zeros_[i]) / (1.0 - std::conj(zeros_[i]) * z);
    }
    total += term;
  }
  return constant_ * total;
}

double BlaschkeProduct::boundary_phase_speed(double theta) const {
  const cplx xi = unimodular(theta);
  double s = 0.0;
  for (cplx a : zeros_) s += (1.0 - std::norm(a)) / std::norm(xi - a);
  return s;
}

Polynomial BlaschkeProduct::numerator() const {
  return Polynomial::from_roots(zeros_) * constant_;
}

Polynomial BlaschkeProduct::denominator() const {
  Polynomial p = Polynomial::constant(1.0);
  for (cplx a : zeros_) p = p * Polynomial({1.0, -std::conj(a)});
  return p;
}

HardyFunction BlaschkeProduct::as_hardy() const {
  std::vector<cplx> params;
  for (cplx a : zeros_) params.push_back(std::conj(a));
  return HardyFunction(numerator(), std::move(params));
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& o) const {
  std::vector<cplx> z = zeros_;
  z.insert(z.end(), o.zeros_.begin(), o.zeros_.end());
  return BlaschkeProduct(std::move(z), constant_ * o.constant_);
}

BlaschkeProduct BlaschkeProduct::pow(int n) const {
  if (n < 0) throw DomainError("negative Blaschke power");
  BlaschkeProduct out;
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

std::vector<cplx> boundary_level_set(const BlaschkeProduct& u, cplx alpha) {
  if (u.degree() < 1) throw DomainError("level set of a constant Blaschke product");
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12) {
    throw DomainError("level-set value alpha must be unimodular");
  }
  alpha /= std::abs(alpha);
  // constant * prod (z - a_j) - alpha * prod (1 - conj(a_j) z) = 0.
  const Polynomial cleared = u.numerator() - u.denominator() * alpha;
  std::vector<cplx> raw = cleared.roots();

  std::vector<cplx> out;
  double worst = 0.0;
  for (cplx r : raw) {
    double theta = std::arg(r);
    for (int step = 0; step < kPolishSteps; ++step) {
      const double phase_error = std::arg(u(unimodular(theta)) / alpha);
      theta -= phase_error / u.boundary_phase_speed(theta);
    }
    const cplx zeta = unimodular(theta);
    worst = std::max(worst, std::abs(u(zeta) - alpha));
    out.push_back(zeta);
  }
  if (worst > kLevelSetResidual) {
    std::ostringstream msg;
    msg << "level set of u = " << alpha << " failed to polish; worst residual " << worst;
    throw AmbiguityError(msg.str());
  }
  std::sort(out.begin(), out.end(),
            [](cplx a, cplx b) { return arg_positive(a) < arg_positive(b); });
  for (size_t k = 0; k < out.size(); ++k) {
    const cplx next = out[(k + 1) % out.size()];
    if (out.size() > 1 && std::abs(out[k] - next) < 1e-9) {
      throw AmbiguityError("level-set roots collapsed onto the same boundary point");
    }
  }
  return out;
}

bool divides(const BlaschkeProduct& v, const BlaschkeProduct& u) {
  return match_zeros(v.zeros(), u.zeros()).only_first.empty();
}

BlaschkeProduct gcd_inner(const BlaschkeProduct& u, const BlaschkeProduct& v) {
  return BlaschkeProduct(match_zeros(u.zeros(), v.zeros()).common);
}

BlaschkeProduct quotient(const BlaschkeProduct& u, const BlaschkeProduct& v) {
  ZeroMatch m = match_zeros(v.zeros(), u.zeros());
  if (!m.only_first.empty()) throw DomainError("quotient: divisor does not divide");
  return BlaschkeProduct(m.only_second, u.constant() / v.constant());
}

}  // namespace hardy

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/hardy_function.hpp"

namespace oracle {

using hardy::cplx;

// Taylor coefficients of num / prod (1 - c z), dividing one factor at a time.
inline std::vector<cplx> taylor(const hardy::HardyFunction& f, int terms) {
  std::vector<cplx> s(static_cast<size_t>(terms), 0.0);
  const auto& num = f.numerator().coeffs();
  for (size_t k = 0; k < num.size() && k < s.size(); ++k) s[k] = num[k];
  for (cplx c : f.pole_params()) {
    for (size_t k = 1; k < s.size(); ++k) s[k] += c * s[k - 1];
  }
  return s;
}

// <f, g> in H^2 as sum f_n conj(g_n).
inline cplx inner(const hardy::HardyFunction& f, const hardy::HardyFunction& g, int terms = 4000) {
  const auto a = taylor(f, terms);
  const auto b = taylor(g, terms);
  cplx s = 0.0;
  for (int k = terms - 1; k >= 0; --k) s += a[static_cast<size_t>(k)] * std::conj(b[static_cast<size_t>(k)]);
  return s;
}

inline double norm(const hardy::HardyFunction& f, int terms = 4000) {
  return std::sqrt(std::abs(inner(f, f, terms)));
}

// Product of (z - a)/(1 - conj(a) z) written out factor by factor.
inline cplx blaschke(const std::vector<cplx>& zeros, cplx z, cplx c = 1.0) {
  cplx v = c;
  for (cplx a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double a = 0.0, double b = 1.0) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen); }
  cplx normal() {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(gen);
    return {re, n(gen)};
  }
  cplx disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }
  // Zeros pairwise at least `sep` apart.
  std::vector<cplx> separated_zeros(int n, double radius, double sep) {
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < n) {
      const cplx a = disk(radius);
      bool ok = true;
      for (cplx b : out) ok = ok && std::abs(a - b) >= sep;
      if (ok) out.push_back(a);
    }
    return out;
  }
};

}  // namespace oracle

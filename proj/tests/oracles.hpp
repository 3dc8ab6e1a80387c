#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

constexpr double kPi = std::numbers::pi;

// c_j = (-1)^j Gamma(a+1) / (Gamma(j+1) Gamma(a-j+1)) with std::tgamma.
inline double gl_gamma_ratio(double alpha, int j) {
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return sign * std::tgamma(alpha + 1.0) / (std::tgamma(j + 1.0) * std::tgamma(alpha - j + 1.0));
}

struct Fraction {
  std::int64_t n_int;
  std::int64_t p;
  std::int64_t q_den;
};

// Truncates a decimal literal such as "4.3195" at `decimals` places by
// dropping characters, then reduces.
inline Fraction truncate_decimal_string(const std::string& literal, int decimals) {
  const auto dot = literal.find('.');
  const std::string int_part = literal.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : literal.substr(dot + 1);
  frac.resize(static_cast<std::size_t>(decimals), '0');
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const std::int64_t whole = std::stoll(int_part);
  std::int64_t rem = std::stoll(frac);
  if (rem == 0) return {whole, 0, 1};
  const std::int64_t g = std::gcd(rem, scale);
  return {whole, rem / g, scale / g};
}

// +-j R e^{j(2k-1)pi/2P}, straight from the closed form.
inline std::vector<std::complex<double>> butterworth_circle(int p, double radius) {
  std::vector<std::complex<double>> out;
  const std::complex<double> j{0.0, 1.0};
  for (int k = 1; k <= p; ++k) {
    const auto base = j * std::polar(radius, (2 * k - 1) * kPi / (2.0 * p));
    out.push_back(base);
    out.push_back(-base);
  }
  return out;
}

// Brute-force: first Q whose sector |arg| <= q pi/2 (+ tol) holds no
// candidate other than the positive real one.
inline int first_strictly_stable_q(int p, double tol = 1e-9) {
  const auto cands = butterworth_circle(p, 1.0);
  for (int q_den = 1;; ++q_den) {
    const double half = kPi / (2.0 * q_den);
    bool ok = true;
    for (const auto& w : cands) {
      const double a = std::abs(std::arg(w));
      if (a < 1e-9) continue;
      if (a <= half + tol) ok = false;
    }
    if (ok) return q_den;
  }
}

// Ascending monic coefficients of prod_k (s - r_k), keeping real parts.
inline std::vector<double> poly_from_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<double> out;
  for (const auto& v : c) out.push_back(v.real());
  return out;
}

// Textbook Butterworth denominator of order n at unit cutoff: roots
// e^{j(2k+n-1)pi/2n}, k = 1..n.
inline std::vector<double> textbook_butterworth(int n) {
  std::vector<std::complex<double>> roots;
  for (int k = 1; k <= n; ++k) roots.push_back(std::polar(1.0, (2 * k + n - 1) * kPi / (2.0 * n)));
  return poly_from_roots(roots);
}

// |H(j w)|^2 of the classical N-th order Butterworth.
inline double butterworth_mag2(double omega, double omega_c, double n) {
  return 1.0 / (1.0 + std::pow(omega / omega_c, 2.0 * n));
}

// E_{1/2}(-x) = e^{x^2} erfc(x).
inline double mittag_leffler_half_neg(double x) { return std::exp(x * x) * std::erfc(x); }

}  // namespace oracle

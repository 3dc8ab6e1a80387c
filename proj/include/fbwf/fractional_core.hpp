#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fbwf {

/// Gamma function. Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula below x = 0.5. Relative error is below 1e-12 on
/// [0.1, 30]. Throws std::domain_error at x = 0, -1, -2, ...
double gamma(double x);

/// Natural log of Gamma for x > 0; stays finite where gamma() overflows.
double log_gamma(double x);

/// Grünwald–Letnikov weights c_0..c_{n-1} of order alpha,
///   c_j = (-1)^j * binom(alpha, j),
/// generated by c_j = c_{j-1} * (1 - (alpha + 1) / j). For integer alpha the
/// recurrence hits an exact zero at j = alpha + 1 and stays there.
std::vector<double> gl_coefficients(double alpha, std::size_t n);

/// A filter order N + P/Q with 0 <= P < Q and gcd(P, Q) = 1 (P = 0 means no
/// fractional part, in which case Q = 1). The commensurate order of the
/// fractional stage is q = 1/Q.
struct RationalOrder {
  std::int64_t n_int = 0;
  std::int64_t p = 0;
  std::int64_t q_den = 1;

  bool has_fraction() const { return p > 0; }
  double commensurate_order() const { return 1.0 / static_cast<double>(q_den); }
  double value() const;

  friend bool operator==(const RationalOrder&, const RationalOrder&) = default;
};

/// Reduces p / q_den to lowest terms and splits off the integer part.
RationalOrder reduce_order(std::int64_t p, std::int64_t q_den);

/// Truncates n_exact toward zero after `decimals` decimal places and reduces
/// the result. Works on the shortest round-trip decimal representation of
/// n_exact, so 2.3 truncates to 2.3 rather than to 2.2.
RationalOrder truncate_order(double n_exact, int decimals);

}  // namespace fbwf

#include "fbwf/fractional_core.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fbwf {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series A_g(x) for Gamma(x + 1) = sqrt(2 pi) t^(x + 1/2) e^-t A_g(x),
// t = x + g + 1/2.
double lanczos_sum(double x) {
  double a = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    a += kLanczosCoeffs[i] / (x + static_cast<double>(i));
  }
  return a;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

constexpr std::int64_t kMaxDecimals = 15;

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("gamma: pole at non-positive integer " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm1 + 0.5) * std::exp(-t) *
         lanczos_sum(xm1);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

std::vector<double> gl_coefficients(double alpha, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("gl_coefficients: n must be >= 1");
  }
  std::vector<double> c(n);
  c[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    c[j] = c[j - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(j));
  }
  return c;
}

double RationalOrder::value() const {
  return static_cast<double>(n_int) + static_cast<double>(p) / static_cast<double>(q_den);
}

RationalOrder reduce_order(std::int64_t p, std::int64_t q_den) {
  if (q_den <= 0) {
    throw std::invalid_argument("reduce_order: denominator must be >= 1");
  }
  if (p < 0) {
    throw std::invalid_argument("reduce_order: numerator must be >= 0");
  }
  RationalOrder order;
  order.n_int = p / q_den;
  const std::int64_t rem = p % q_den;
  if (rem == 0) {
    return order;
  }
  const std::int64_t g = std::gcd(rem, q_den);
  order.p = rem / g;
  order.q_den = q_den / g;
  return order;
}

RationalOrder truncate_order(double n_exact, int decimals) {
  if (!(n_exact > 0.0) || !std::isfinite(n_exact)) {
    throw std::invalid_argument("truncate_order: order must be positive and finite");
  }
  if (decimals < 1 || decimals > kMaxDecimals) {
    throw std::invalid_argument("truncate_order: decimals must be in [1, 15]");
  }

  std::array<char, 400> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), n_exact, std::chars_format::fixed);
  if (res.ec != std::errc{}) {
    throw std::invalid_argument("truncate_order: value cannot be formatted");
  }
  const std::string_view text(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
  const auto dot = text.find('.');
  const std::string_view int_digits = text.substr(0, dot);
  const std::string_view frac_digits =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // Keep int_part * scale within int64.
  if (int_digits.size() + static_cast<std::size_t>(decimals) > 18) {
    throw std::invalid_argument("truncate_order: value too large for requested decimals");
  }

  std::int64_t numer = 0;
  for (char ch : int_digits) numer = numer * 10 + (ch - '0');
  for (int i = 0; i < decimals; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    numer = numer * 10 + (idx < frac_digits.size() ? frac_digits[idx] - '0' : 0);
  }
  return reduce_order(numer, scale);
}

}  // namespace fbwf

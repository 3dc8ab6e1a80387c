#include "fbwf/response.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fbwf/error.hpp"
#include "fbwf/fractional_core.hpp"

namespace fbwf {

namespace {

std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> x) {
  std::complex<double> acc{};
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

void require_increasing(const std::vector<double>& points) {
  if (points.empty()) throw std::invalid_argument("frequency grid is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0) || !std::isfinite(points[i])) {
      throw std::invalid_argument("frequency grid points must be positive");
    }
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw std::invalid_argument("frequency grid must be strictly increasing");
    }
  }
}

// k q, snapped to the nearest integer when it is one up to rounding so that
// integer-order terms get exactly terminating weights.
double term_order(std::size_t k, double q) {
  const double alpha = static_cast<double>(k) * q;
  const double r = std::round(alpha);
  return std::abs(alpha - r) < 1e-12 ? r : alpha;
}

// sum_k coeffs[k] h^{-k q} c_j^{(k q)} for j < len, trailing exact zeros removed.
std::vector<double> combined_weights(const std::vector<double>& coeffs, double q, double h,
                                     std::size_t len) {
  std::vector<double> w(len, 0.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    const double alpha = term_order(k, q);
    const double scale = coeffs[k] * std::pow(h, -alpha);
    const auto c = gl_coefficients(alpha, len);
    for (std::size_t j = 0; j < len; ++j) w[j] += scale * c[j];
  }
  while (w.size() > 1 && w.back() == 0.0) w.pop_back();
  return w;
}

}  // namespace

FrequencyGrid FrequencyGrid::log(double from, double to, std::size_t count) {
  if (!(from > 0.0) || !(to > from) || count < 2) {
    throw std::invalid_argument("log grid needs 0 < from < to and at least 2 points");
  }
  std::vector<double> pts(count);
  const double a = std::log10(from);
  const double b = std::log10(to);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  pts.front() = from;
  pts.back() = to;
  return from_points(std::move(pts), GridSpacing::Log);
}

FrequencyGrid FrequencyGrid::linear(double from, double to, std::size_t count) {
  if (!(from > 0.0) || !(to > from) || count < 2) {
    throw std::invalid_argument("linear grid needs 0 < from < to and at least 2 points");
  }
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  pts.back() = to;
  return from_points(std::move(pts), GridSpacing::Linear);
}

FrequencyGrid FrequencyGrid::from_points(std::vector<double> points, GridSpacing spacing) {
  require_increasing(points);
  return FrequencyGrid{std::move(points), spacing};
}

void TimeGrid::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("time step must be positive");
  if (!(t_max >= h) || !std::isfinite(t_max)) {
    throw std::invalid_argument("time horizon must be at least one step");
  }
  if (memory && *memory < 1) throw std::invalid_argument("memory length must be >= 1");
}

std::complex<double> principal_power(double omega, double q) {
  if (q == 1.0) return {0.0, omega};
  return std::polar(std::pow(omega, q), q * std::numbers::pi / 2.0);
}

std::complex<double> stage_response(const Stage& stage, double omega) {
  const auto form = commensurate_form(stage);
  const auto w = principal_power(omega, form.q);
  return horner(form.num, w) / horner(form.den, w);
}

std::complex<double> stage_response_factored(const WPlaneTF& tf, double omega) {
  if (tf.factors.empty()) throw std::invalid_argument("stage has no factored form");
  const auto w = principal_power(omega, tf.q());
  std::complex<double> den{1.0, 0.0};
  for (const auto& f : tf.factors) den *= horner(f.coeffs, w);
  return tf.num / den;
}

std::complex<double> cascade_response(const CascadeFilter& filter, double omega) {
  std::complex<double> h{1.0, 0.0};
  for (const auto& s : filter.stages) h *= stage_response(s, omega);
  return h;
}

std::vector<std::complex<double>> freq_response(const CascadeFilter& filter,
                                                const FrequencyGrid& grid) {
  std::vector<std::complex<double>> out;
  out.reserve(grid.points.size());
  for (double omega : grid.points) out.push_back(cascade_response(filter, omega));
  return out;
}

std::vector<BodePoint> bode(const CascadeFilter& filter, const FrequencyGrid& grid) {
  const auto h = freq_response(filter, grid);
  std::vector<BodePoint> out;
  out.reserve(h.size());
  double prev_raw = 0.0;
  double offset = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double mag = std::abs(h[i]);
    const double db =
        mag == 0.0 ? -std::numeric_limits<double>::infinity() : 20.0 * std::log10(mag);
    const double raw = std::arg(h[i]) * 180.0 / std::numbers::pi;
    if (i > 0) {
      const double jump = raw - prev_raw;
      if (jump > 180.0) offset -= 360.0;
      if (jump < -180.0) offset += 360.0;
    }
    prev_raw = raw;
    out.push_back({grid.points[i], db, raw + offset});
  }
  return out;
}

std::vector<double> magnitude_squared(const CascadeFilter& filter, const FrequencyGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.points.size());
  for (const auto& v : freq_response(filter, grid)) out.push_back(std::norm(v));
  return out;
}

std::vector<double> simulate_stage_gl(const CommensurateForm& stage, const std::vector<double>& u,
                                      double h, std::optional<std::size_t> memory) {
  const std::size_t n_samples = u.size();
  if (n_samples == 0) return {};
  const std::size_t len = memory ? std::min(n_samples, *memory + 1) : n_samples;

  const auto den_w = combined_weights(stage.den, stage.q, h, len);
  const auto num_w = combined_weights(stage.num, stage.q, h, len);
  const double w0 = den_w.front();
  if (w0 == 0.0) throw NumericalError("G-L march: singular leading weight");

  std::vector<double> y(n_samples, 0.0);
  for (std::size_t n = 0; n < n_samples; ++n) {
    double acc = 0.0;
    const std::size_t jn = std::min(n, num_w.size() - 1);
    for (std::size_t j = 0; j <= jn; ++j) acc += num_w[j] * u[n - j];
    const std::size_t jd = std::min(n, den_w.size() - 1);
    for (std::size_t j = 1; j <= jd; ++j) acc -= den_w[j] * y[n - j];
    y[n] = acc / w0;
    if (!(std::abs(y[n]) <= kDivergenceLimit)) {
      throw NumericalError("G-L march diverged at t = " + std::to_string(n * h) +
                           " (unstable or marginal stage?)");
    }
  }
  return y;
}

std::vector<StepSample> step_response_gl(const CascadeFilter& filter, const TimeGrid& grid) {
  grid.validate();
  if (filter.stages.empty()) throw std::invalid_argument("step response: empty cascade");
  const auto steps = static_cast<std::size_t>(std::floor(grid.t_max / grid.h + 1e-9));
  std::vector<double> signal(steps + 1, 1.0);
  for (const auto& s : filter.stages) {
    signal = simulate_stage_gl(commensurate_form(s), signal, grid.h, grid.memory);
  }
  std::vector<StepSample> out;
  out.reserve(signal.size());
  for (std::size_t n = 0; n < signal.size(); ++n) {
    out.push_back({static_cast<double>(n) * grid.h, signal[n]});
  }
  return out;
}

double mittag_leffler(double alpha, double z) {
  if (!(alpha > 0.0)) throw std::invalid_argument("mittag_leffler: alpha must be positive");
  if (!(std::abs(z) <= 5.0)) throw std::invalid_argument("mittag_leffler: |z| must be <= 5");
  constexpr int kMaxTerms = 500;
  constexpr double kTermTol = 1e-14;
  if (z == 0.0) return 1.0;

  const double log_abs_z = std::log(std::abs(z));
  double sum = 0.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double arg = alpha * k + 1.0;
    const double sign = (z < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
    const double term =
        arg < 30.0 ? std::pow(z, k) / gamma(arg) : sign * std::exp(k * log_abs_z - log_gamma(arg));
    sum += term;
    if (std::abs(term) < kTermTol) return sum;
  }
  throw NumericalError("mittag_leffler: series did not converge within 500 terms");
}

}  // namespace fbwf

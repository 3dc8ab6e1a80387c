#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "fbwf/tf_builder.hpp"

namespace fbwf {

enum class GridSpacing { Log, Linear };

/// Strictly increasing positive frequencies in rad/s.
struct FrequencyGrid {
  std::vector<double> points;
  GridSpacing spacing = GridSpacing::Log;

  static FrequencyGrid log(double from, double to, std::size_t count);
  static FrequencyGrid linear(double from, double to, std::size_t count);
  static FrequencyGrid from_points(std::vector<double> points, GridSpacing spacing);
};

/// Step h and horizon t_max in seconds. `memory` caps how many past samples
/// enter the Grünwald–Letnikov sums; unset means full history.
struct TimeGrid {
  double h = 1e-3;
  double t_max = 30.0;
  std::optional<std::size_t> memory;

  void validate() const;
};

/// (j omega)^q on the principal branch: omega^q e^{j q pi / 2}.
std::complex<double> principal_power(double omega, double q);

std::complex<double> stage_response(const Stage& stage, double omega);

/// Evaluates a w-plane stage through its factored denominator instead of
/// the expanded polynomial. Requires tf.factors to be populated.
std::complex<double> stage_response_factored(const WPlaneTF& tf, double omega);

std::complex<double> cascade_response(const CascadeFilter& filter, double omega);

std::vector<std::complex<double>> freq_response(const CascadeFilter& filter,
                                                const FrequencyGrid& grid);

struct BodePoint {
  double omega;
  double magnitude_db;  // -inf when |H| == 0
  double phase_deg;     // unwrapped along the grid
};

/// Bode data with phase unwrapped by +-180 degree jump detection. The grid
/// should carry at least 50 points per decade for the unwrap to be reliable.
std::vector<BodePoint> bode(const CascadeFilter& filter, const FrequencyGrid& grid);

std::vector<double> magnitude_squared(const CascadeFilter& filter, const FrequencyGrid& grid);

struct StepSample {
  double t;
  double y;
};

inline constexpr double kDivergenceLimit = 1e6;

/// Unit-step response from rest. Each stage sum_k a_k D^{kq} y = sum_k b_k D^{kq} u
/// is discretised with Grünwald–Letnikov weights and marched forward; stage
/// outputs feed the next stage. Throws NumericalError when |y| exceeds
/// kDivergenceLimit.
std::vector<StepSample> step_response_gl(const CascadeFilter& filter, const TimeGrid& grid);

/// Single-stage march for an arbitrary sampled input u (u[n] at t = n h).
std::vector<double> simulate_stage_gl(const CommensurateForm& stage, const std::vector<double>& u,
                                      double h, std::optional<std::size_t> memory);

/// One-parameter Mittag-Leffler function E_alpha(z) by its power series.
/// Requires alpha > 0 and |z| <= 5; throws NumericalError if 500 terms do
/// not bring the term below 1e-14.
double mittag_leffler(double alpha, double z);

}  // namespace fbwf

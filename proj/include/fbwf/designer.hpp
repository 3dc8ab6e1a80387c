#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fbwf/fractional_core.hpp"
#include "fbwf/pole_engine.hpp"
#include "fbwf/tf_builder.hpp"

namespace fbwf {

/// Low-pass requirements: pass-band edge omega_p and stop-band edge omega_s
/// in rad/s, maximum pass-band attenuation alpha_p and minimum stop-band
/// attenuation alpha_s in dB.
struct DesignSpec {
  double omega_p = 0.0;
  double omega_s = 0.0;
  double alpha_p = 0.0;
  double alpha_s = 0.0;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

/// Which edge the fractional stage's cutoff is solved from. The integer
/// stage always uses the stop-band edge.
enum class CutoffRule { StopBand, PassBand };

std::string_view to_string(CutoffRule rule);
std::optional<CutoffRule> parse_cutoff_rule(std::string_view text);

struct DesignOptions {
  int decimals = 1;
  CutoffRule cutoff_rule = CutoffRule::StopBand;
};

/// Exact (real-valued) Butterworth order meeting the spec:
///   N = log sqrt((10^{0.1 a_s} - 1) / (10^{0.1 a_p} - 1)) / log(w_s / w_p)
double required_order(const DesignSpec& spec);

/// Omega_c = omega_s / (10^{0.1 alpha_s} - 1)^{1/2n}; places |H(j omega_s)|^2
/// at exactly 10^{-0.1 alpha_s}.
double cutoff_from_stopband(double omega_s, double alpha_s, double n);

/// Omega_c = omega_p / (10^{0.1 alpha_p} - 1)^{1/2n}.
double cutoff_from_passband(double omega_p, double alpha_p, double n);

/// s-plane cutoff radius to w-plane radius: omega_c^(1/Q).
double map_radius(double omega_c, int q_den);

struct StagePoles {
  std::string kind;  // "classical" or "fractional"
  int q_den = 1;
  std::vector<WPole> poles;
};

struct DesignReport {
  DesignSpec spec;
  DesignOptions options;
  double n_exact = 0.0;
  RationalOrder order;
  std::optional<double> omega_c_int;   // rad/s, integer stage
  std::optional<double> omega_c_frac;  // rad/s, fractional stage (s-plane)
  std::optional<double> omega_bar_c;   // w-plane radius of the fractional stage
  CascadeFilter filter;
  std::vector<StagePoles> poles;  // one entry per stage, same order
  std::vector<std::string> warnings;
  // Measured -20 log10 |H| of the cascade at the two band edges.
  double attenuation_at_passband_db = 0.0;
  double attenuation_at_stopband_db = 0.0;
};

/// Order from the spec, truncated to `decimals`, split into a classical
/// N-th order stage and a fractional P/Q stage, cascaded.
DesignReport design_filter(const DesignSpec& spec, const DesignOptions& options = {});

}  // namespace fbwf

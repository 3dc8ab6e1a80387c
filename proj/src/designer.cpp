#include "fbwf/designer.hpp"

#include <cmath>
#include <stdexcept>

#include "fbwf/response.hpp"

namespace fbwf {

namespace {

// 10^{0.1 a} - 1 without cancellation for small a.
double attenuation_ratio(double alpha_db) { return std::expm1(0.1 * alpha_db * std::log(10.0)); }

double attenuation_db(const CascadeFilter& filter, double omega) {
  return -20.0 * std::log10(std::abs(cascade_response(filter, omega)));
}

}  // namespace

void DesignSpec::validate() const {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p)) {
    throw std::invalid_argument("omega_p must be > 0");
  }
  if (!(omega_p < omega_s) || !std::isfinite(omega_s)) {
    throw std::invalid_argument("omega_p must be < omega_s");
  }
  if (!(alpha_p > 0.0) || !std::isfinite(alpha_p)) {
    throw std::invalid_argument("alpha_p must be > 0");
  }
  if (!(alpha_p < alpha_s) || !std::isfinite(alpha_s)) {
    throw std::invalid_argument("alpha_p must be < alpha_s");
  }
}

std::string_view to_string(CutoffRule rule) {
  return rule == CutoffRule::StopBand ? "stopband" : "passband";
}

std::optional<CutoffRule> parse_cutoff_rule(std::string_view text) {
  if (text == "stopband") return CutoffRule::StopBand;
  if (text == "passband") return CutoffRule::PassBand;
  return std::nullopt;
}

double required_order(const DesignSpec& spec) {
  spec.validate();
  const double ratio = attenuation_ratio(spec.alpha_s) / attenuation_ratio(spec.alpha_p);
  return 0.5 * std::log(ratio) / std::log(spec.omega_s / spec.omega_p);
}

double cutoff_from_stopband(double omega_s, double alpha_s, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("cutoff_from_stopband: order must be > 0");
  if (!(omega_s > 0.0) || !(alpha_s > 0.0)) {
    throw std::invalid_argument("cutoff_from_stopband: edge and attenuation must be > 0");
  }
  return omega_s / std::pow(attenuation_ratio(alpha_s), 1.0 / (2.0 * n));
}

double cutoff_from_passband(double omega_p, double alpha_p, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("cutoff_from_passband: order must be > 0");
  if (!(omega_p > 0.0) || !(alpha_p > 0.0)) {
    throw std::invalid_argument("cutoff_from_passband: edge and attenuation must be > 0");
  }
  return omega_p / std::pow(attenuation_ratio(alpha_p), 1.0 / (2.0 * n));
}

double map_radius(double omega_c, int q_den) {
  if (!(omega_c > 0.0)) throw std::invalid_argument("map_radius: cutoff must be > 0");
  if (q_den < 1) throw std::invalid_argument("map_radius: Q must be >= 1");
  return std::pow(omega_c, 1.0 / q_den);
}

DesignReport design_filter(const DesignSpec& spec, const DesignOptions& options) {
  spec.validate();
  if (options.decimals < 1) throw std::invalid_argument("decimals must be >= 1");

  DesignReport report;
  report.spec = spec;
  report.options = options;
  report.n_exact = required_order(spec);
  report.order = truncate_order(report.n_exact, options.decimals);
  if (report.order.n_int == 0 && !report.order.has_fraction()) {
    throw std::invalid_argument("truncated order is zero; increase decimals");
  }
  if (report.order.has_fraction() && report.order.p >= report.order.q_den) {
    throw std::invalid_argument("fractional part must satisfy P < Q");
  }

  std::vector<Stage> stages;
  if (report.order.n_int > 0) {
    const int n = static_cast<int>(report.order.n_int);
    const double wc = cutoff_from_stopband(spec.omega_s, spec.alpha_s, n);
    report.omega_c_int = wc;
    stages.emplace_back(classical_butterworth(n, wc));
    report.poles.push_back({"classical", 1, stable_poles(n, 1, wc).stable});
  }
  if (report.order.has_fraction()) {
    const int p = static_cast<int>(report.order.p);
    const int q_den = static_cast<int>(report.order.q_den);
    const double wc = options.cutoff_rule == CutoffRule::StopBand
                          ? cutoff_from_stopband(spec.omega_s, spec.alpha_s, p)
                          : cutoff_from_passband(spec.omega_p, spec.alpha_p, p);
    auto frac = build_wtf(p, q_den, wc);
    report.omega_c_frac = wc;
    report.omega_bar_c = frac.radius;
    report.poles.push_back({"fractional", q_den, frac.poles.stable});
    for (auto& w : frac.poles.warnings) report.warnings.push_back(std::move(w));
    stages.emplace_back(std::move(frac.tf));
  }
  report.filter = cascade(std::move(stages));
  report.attenuation_at_passband_db = attenuation_db(report.filter, spec.omega_p);
  report.attenuation_at_stopband_db = attenuation_db(report.filter, spec.omega_s);
  return report;
}

}  // namespace fbwf

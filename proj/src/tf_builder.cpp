#include "fbwf/tf_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fbwf/error.hpp"

namespace fbwf {

namespace {

constexpr double kRealTol = 1e-12;
constexpr double kPairTol = 1e-9;

}  // namespace

std::vector<RealFactor> factors_from_roots(std::span<const std::complex<double>> roots) {
  std::vector<bool> used(roots.size(), false);
  std::vector<RealFactor> factors;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const auto z = roots[i];
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= kRealTol * scale) {
      factors.push_back({{-z.real(), 1.0}});
      continue;
    }
    std::size_t match = roots.size();
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - std::conj(z)) <= kPairTol * scale) {
        match = j;
        break;
      }
    }
    if (match == roots.size()) {
      throw std::invalid_argument("factors_from_poles: pole set is not closed under conjugation");
    }
    used[match] = true;
    const long double re = z.real();
    const long double im = z.imag();
    factors.push_back({{static_cast<double>(re * re + im * im), -2.0 * z.real(), 1.0}});
  }
  return factors;
}

std::vector<RealFactor> factors_from_poles(std::span<const WPole> poles) {
  std::vector<std::complex<double>> roots;
  roots.reserve(poles.size());
  for (const auto& p : poles) roots.push_back(p.value);
  return factors_from_roots(roots);
}

std::vector<double> expand_polynomial(std::span<const RealFactor> factors) {
  if (factors.empty()) throw std::invalid_argument("expand_polynomial: no factors");
  // Accumulate in extended precision; the result is rounded once at the end.
  std::vector<long double> acc{1.0L};
  for (const auto& f : factors) {
    std::vector<long double> next(acc.size() + f.coeffs.size() - 1, 0.0L);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < f.coeffs.size(); ++j) next[i + j] += acc[i] * f.coeffs[j];
    }
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

FractionalStage build_wtf(int p, int q_den, double omega_c, bool require_coprime) {
  if (p < 1) throw std::invalid_argument("build_wtf: P must be >= 1");
  if (q_den < 1) throw std::invalid_argument("build_wtf: Q must be >= 1");
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
    throw std::invalid_argument("build_wtf: cutoff must be positive");
  }
  if (require_coprime && std::gcd(p, q_den) != 1) {
    throw std::invalid_argument("build_wtf: P and Q share a common factor");
  }
  if (q_den > 1 && p >= q_den) {
    throw std::invalid_argument("build_wtf: fractional order P/Q must be below one");
  }

  FractionalStage stage;
  stage.radius = std::pow(omega_c, 1.0 / q_den);
  stage.poles = stable_poles(p, q_den, stage.radius);
  if (stage.poles.stable.empty()) {
    throw NumericalError("build_wtf: no stable poles");
  }
  stage.tf.q_den = q_den;
  stage.tf.factors = factors_from_poles(stage.poles.stable);
  stage.tf.den = expand_polynomial(stage.tf.factors);
  stage.tf.num = stage.tf.den.front();
  return stage;
}

ClassicalTF classical_butterworth(int n, double omega_c) {
  if (n < 1) throw std::invalid_argument("classical_butterworth: order must be >= 1");
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
    throw std::invalid_argument("classical_butterworth: cutoff must be positive");
  }
  std::vector<RealFactor> factors;
  for (int k = 1; k <= n / 2; ++k) {
    const double damping = 2.0 * std::sin((2 * k - 1) * std::numbers::pi / (2.0 * n));
    factors.push_back({{omega_c * omega_c, damping * omega_c, 1.0}});
  }
  if (n % 2 == 1) factors.push_back({{omega_c, 1.0}});

  ClassicalTF tf;
  tf.den = expand_polynomial(factors);
  tf.num = {tf.den.front()};
  return tf;
}

CascadeFilter cascade(std::vector<Stage> stages) {
  if (stages.empty()) throw std::invalid_argument("cascade: no stages");
  for (const auto& s : stages) {
    const auto form = commensurate_form(s);
    if (form.den.empty() || form.num.empty()) {
      throw std::invalid_argument("cascade: stage has empty coefficients");
    }
    if (form.den.back() == 0.0) throw std::invalid_argument("cascade: leading coefficient is zero");
  }
  return CascadeFilter{std::move(stages)};
}

std::vector<SPowerTerm> to_s_expression(const WPlaneTF& tf) {
  std::vector<SPowerTerm> terms;
  for (std::size_t i = tf.den.size(); i-- > 0;) {
    terms.push_back({static_cast<double>(i) / tf.q_den, tf.den[i]});
  }
  return terms;
}

CommensurateForm commensurate_form(const Stage& stage) {
  return std::visit(
      [](const auto& s) -> CommensurateForm {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ClassicalTF>) {
          return {1.0, s.num, s.den};
        } else {
          return {s.q(), {s.num}, s.den};
        }
      },
      stage);
}

}  // namespace fbwf

#pragma once

#include <complex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fbwf/pole_engine.hpp"

namespace fbwf {

/// Monic real factor of degree 1 or 2; coefficients ascending.
///   linear:    (w - r)             -> {-r, 1}
///   quadratic: (w - p)(w - conj p) -> {|p|^2, -2 Re p, 1}
struct RealFactor {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Pairs conjugates into real factors, in input order of first appearance.
/// Throws std::invalid_argument when the set is not closed under conjugation.
std::vector<RealFactor> factors_from_poles(std::span<const WPole> poles);
std::vector<RealFactor> factors_from_roots(std::span<const std::complex<double>> roots);

/// Product of the factors as an ascending coefficient vector.
std::vector<double> expand_polynomial(std::span<const RealFactor> factors);

/// All-pole commensurate transfer function in w = s^q, q = 1/q_den:
///   H(w) = num / sum_i den[i] w^i,   den.back() == 1.
/// `factors` holds the factored denominator when known (empty after loading
/// a stored document).
struct WPlaneTF {
  int q_den = 1;
  std::vector<double> den;
  double num = 1.0;
  std::vector<RealFactor> factors;

  double q() const { return 1.0 / q_den; }
  int degree() const { return static_cast<int>(den.size()) - 1; }
};

/// Integer-order rational TF in s, ascending coefficients.
struct ClassicalTF {
  std::vector<double> num;
  std::vector<double> den;
};

using Stage = std::variant<ClassicalTF, WPlaneTF>;

struct CascadeFilter {
  std::vector<Stage> stages;
};

struct FractionalStage {
  WPlaneTF tf;
  PoleSet poles;
  double radius = 1.0;  // w-plane radius, Omega_c^(1/Q)
};

/// Fractional Butterworth-like stage of order P/Q with s-plane cutoff
/// omega_c. The w-plane radius is omega_c^(1/Q); only strictly stable
/// candidates are kept and num = den[0] gives unity DC gain. Requires P < Q,
/// except that Q = 1 is accepted and yields the classical filter.
/// With require_coprime = false, unreduced pairs such as 2/4 are accepted.
FractionalStage build_wtf(int p, int q_den, double omega_c, bool require_coprime = true);

/// Classical N-th order Butterworth low-pass, numerator omega_c^N.
ClassicalTF classical_butterworth(int n, double omega_c);

CascadeFilter cascade(std::vector<Stage> stages);

struct SPowerTerm {
  double exponent;
  double coefficient;
};

/// den[i] w^i rewritten as den[i] s^(i q), highest exponent first.
std::vector<SPowerTerm> to_s_expression(const WPlaneTF& tf);

/// Ascending coefficients and commensurate order of any stage, as consumed
/// by the response evaluators.
struct CommensurateForm {
  double q;
  std::vector<double> num;
  std::vector<double> den;
};
CommensurateForm commensurate_form(const Stage& stage);

}  // namespace fbwf

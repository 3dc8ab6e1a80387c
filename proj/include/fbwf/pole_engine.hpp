#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fbwf {

/// Damping taxonomy of a w-plane pole for commensurate order q = 1/Q.
///   |arg w| <  q pi/2           Unstable
///   |arg w| == q pi/2           Marginal (maps onto the s-plane imaginary axis)
///   q pi/2 < |arg w| <  q pi    UnderDamped
///   q pi   <= |arg w| < pi      HyperDamped
///   |arg w| == pi               UltraDamped
enum class PoleClass { Unstable, Marginal, UnderDamped, HyperDamped, UltraDamped };

std::string_view to_string(PoleClass c);
std::optional<PoleClass> parse_pole_class(std::string_view text);

inline bool is_stable(PoleClass c) {
  return c != PoleClass::Unstable && c != PoleClass::Marginal;
}

struct WPole {
  std::complex<double> value;
  double arg_abs = 0.0;  // |arg(value)| in [0, pi]
  PoleClass kind = PoleClass::Unstable;
};

inline constexpr double kDefaultBoundaryEps = 1e-9;

/// The 2P roots of 1 + (-w^2 / R^2)^P = 0, i.e. w_k = +-j R e^{j(2k-1)pi/2P}
/// for k = 1..P, listed in generation order (+ branch then - branch per k).
std::vector<std::complex<double>> candidate_poles(int p, double radius);

/// Classifies an arbitrary nonzero w for q = 1/q_den. Both boundaries
/// q pi/2 and pi, and the band edge q pi, are matched within eps radians;
/// a pole on the q pi edge is HyperDamped.
WPole classify_pole(std::complex<double> w, int q_den, double eps = kDefaultBoundaryEps);

/// All 2P candidates, classified from their exact angles (integer multiples
/// of pi/2P), in canonical order: descending |arg|, ties by ascending Im.
std::vector<WPole> classified_candidates(int p, int q_den, double radius);

struct PoleSet {
  std::vector<WPole> stable;    // canonical order, conjugate-closed
  std::vector<WPole> marginal;  // dropped: on the stability boundary
  std::vector<WPole> unstable;  // dropped
  std::vector<std::string> warnings;
};

/// Candidates with Unstable and Marginal poles removed. Dropping Marginal
/// poles adds a warning.
PoleSet stable_poles(int p, int q_den, double radius);

struct StabilityCensus {
  int unstable = 0;
  int marginal = 0;
  int under_damped = 0;
  int hyper_damped = 0;
  int ultra_damped = 0;

  int total() const { return unstable + marginal + under_damped + hyper_damped + ultra_damped; }
  int count(PoleClass c) const;
  friend bool operator==(const StabilityCensus&, const StabilityCensus&) = default;
};

StabilityCensus stability_census(int p, int q_den);

/// Smallest Q >= 1 at which every candidate except the positive real one
/// (arg 0, unstable for every Q) is strictly stable. Marginal counts as not
/// stable.
int first_stable_q(int p);

}  // namespace fbwf

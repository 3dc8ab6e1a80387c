#include "fbwf/pole_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace fbwf {

namespace {

constexpr double kPi = std::numbers::pi;

void require_valid(int p, int q_den) {
  if (p < 1) throw std::invalid_argument("pole count P must be >= 1");
  if (q_den < 1) throw std::invalid_argument("denominator Q must be >= 1");
}

void require_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("radius must be positive and finite");
  }
}

// A candidate sits at angle m * pi / (2P) with m an integer in (-2P, 2P].
struct ExactCandidate {
  int m;
};

std::vector<ExactCandidate> exact_candidates(int p) {
  std::vector<ExactCandidate> out;
  out.reserve(2 * static_cast<std::size_t>(p));
  for (int k = 1; k <= p; ++k) {
    for (int branch : {+1, -1}) {
      int m = branch * p + (2 * k - 1);
      if (m > 2 * p) m -= 4 * p;
      out.push_back({m});
    }
  }
  return out;
}

// Mirror-consistent evaluation: angles past pi/2 are computed from their
// supplement so that -w is bit-exact with its own candidate.
std::complex<double> candidate_value(int m, int p, double radius) {
  const int am = std::abs(m);
  const double sign = m < 0 ? -1.0 : 1.0;
  if (am == 0) return {radius, 0.0};
  if (am == 2 * p) return {-radius, 0.0};
  if (am == p) return {0.0, sign * radius};
  if (am < p) {
    const double a = am * kPi / (2.0 * p);
    return {radius * std::cos(a), sign * radius * std::sin(a)};
  }
  const double a = (2 * p - am) * kPi / (2.0 * p);
  return {-radius * std::cos(a), sign * radius * std::sin(a)};
}

// Compares |m| / (2P) against 1/(2Q) and 1/Q in integers.
PoleClass exact_class(int abs_m, int p, int q_den) {
  if (abs_m == 2 * p) return PoleClass::UltraDamped;
  const long long scaled = static_cast<long long>(abs_m) * q_den;
  if (scaled < p) return PoleClass::Unstable;
  if (scaled == p) return PoleClass::Marginal;
  if (scaled < 2LL * p) return PoleClass::UnderDamped;
  return PoleClass::HyperDamped;
}

}  // namespace

std::string_view to_string(PoleClass c) {
  switch (c) {
    case PoleClass::Unstable: return "unstable";
    case PoleClass::Marginal: return "marginal";
    case PoleClass::UnderDamped: return "under";
    case PoleClass::HyperDamped: return "hyper";
    case PoleClass::UltraDamped: return "ultra";
  }
  return "unknown";
}

std::optional<PoleClass> parse_pole_class(std::string_view text) {
  for (auto c : {PoleClass::Unstable, PoleClass::Marginal, PoleClass::UnderDamped,
                 PoleClass::HyperDamped, PoleClass::UltraDamped}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

int StabilityCensus::count(PoleClass c) const {
  switch (c) {
    case PoleClass::Unstable: return unstable;
    case PoleClass::Marginal: return marginal;
    case PoleClass::UnderDamped: return under_damped;
    case PoleClass::HyperDamped: return hyper_damped;
    case PoleClass::UltraDamped: return ultra_damped;
  }
  return 0;
}

std::vector<std::complex<double>> candidate_poles(int p, double radius) {
  require_valid(p, 1);
  require_radius(radius);
  std::vector<std::complex<double>> out;
  for (const auto& c : exact_candidates(p)) out.push_back(candidate_value(c.m, p, radius));
  return out;
}

WPole classify_pole(std::complex<double> w, int q_den, double eps) {
  if (w == std::complex<double>{}) throw std::invalid_argument("classify_pole: zero pole");
  if (q_den < 1) throw std::invalid_argument("classify_pole: Q must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("classify_pole: eps must be positive");

  const double arg_abs = std::abs(std::arg(w));
  const double q = 1.0 / q_den;
  const double half = q * kPi / 2.0;

  PoleClass kind;
  if (arg_abs < half - eps) {
    kind = PoleClass::Unstable;
  } else if (arg_abs <= half + eps) {
    kind = PoleClass::Marginal;
  } else if (arg_abs >= kPi - eps) {
    kind = PoleClass::UltraDamped;
  } else if (arg_abs < q * kPi - eps) {
    kind = PoleClass::UnderDamped;
  } else {
    kind = PoleClass::HyperDamped;
  }
  return {w, arg_abs, kind};
}

std::vector<WPole> classified_candidates(int p, int q_den, double radius) {
  require_valid(p, q_den);
  require_radius(radius);

  struct Keyed {
    int abs_m;
    WPole pole;
  };
  std::vector<Keyed> keyed;
  for (const auto& c : exact_candidates(p)) {
    const int am = std::abs(c.m);
    keyed.push_back({am, WPole{candidate_value(c.m, p, radius), am * kPi / (2.0 * p),
                               exact_class(am, p, q_den)}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.abs_m != b.abs_m) return a.abs_m > b.abs_m;
    return a.pole.value.imag() < b.pole.value.imag();
  });

  std::vector<WPole> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(k.pole);
  return out;
}

PoleSet stable_poles(int p, int q_den, double radius) {
  PoleSet set;
  for (const auto& pole : classified_candidates(p, q_den, radius)) {
    if (pole.kind == PoleClass::Unstable) {
      set.unstable.push_back(pole);
    } else if (pole.kind == PoleClass::Marginal) {
      set.marginal.push_back(pole);
    } else {
      set.stable.push_back(pole);
    }
  }
  if (!set.marginal.empty()) {
    set.warnings.push_back("dropped " + std::to_string(set.marginal.size()) +
                           " marginal pole(s) on |arg w| = q*pi/2 for P=" + std::to_string(p) +
                           ", Q=" + std::to_string(q_den));
  }
  return set;
}

StabilityCensus stability_census(int p, int q_den) {
  require_valid(p, q_den);
  StabilityCensus census;
  for (const auto& c : exact_candidates(p)) {
    switch (exact_class(std::abs(c.m), p, q_den)) {
      case PoleClass::Unstable: ++census.unstable; break;
      case PoleClass::Marginal: ++census.marginal; break;
      case PoleClass::UnderDamped: ++census.under_damped; break;
      case PoleClass::HyperDamped: ++census.hyper_damped; break;
      case PoleClass::UltraDamped: ++census.ultra_damped; break;
    }
  }
  return census;
}

int first_stable_q(int p) {
  require_valid(p, 1);
  const auto candidates = exact_candidates(p);
  // Q = P + 1 always qualifies: the smallest nonzero |m| is 1 and P < Q.
  for (int q_den = 1;; ++q_den) {
    const bool ok = std::all_of(candidates.begin(), candidates.end(), [&](const ExactCandidate& c) {
      return c.m == 0 || is_stable(exact_class(std::abs(c.m), p, q_den));
    });
    if (ok) return q_den;
  }
}

}  // namespace fbwf

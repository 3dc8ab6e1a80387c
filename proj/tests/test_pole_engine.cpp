#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "fbwf/pole_engine.hpp"
#include "oracles.hpp"

using namespace fbwf;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Every expected value appears among `got` within tol (multiset match).
bool same_set(std::vector<cd> got, std::vector<cd> expected, double tol) {
  if (got.size() != expected.size()) return false;
  for (const auto& e : expected) {
    auto it = std::find_if(got.begin(), got.end(), [&](const cd& g) { return std::abs(g - e) <= tol; });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("candidate poles for P = 1, 2, 3") {
  CHECK(same_set(candidate_poles(1, 1.0), {{1, 0}, {-1, 0}}, 1e-15));
  CHECK(same_set(candidate_poles(2, 1.0),
                 {{-0.7071, 0.7071}, {-0.7071, -0.7071}, {0.7071, 0.7071}, {0.7071, -0.7071}}, 1e-4));
  CHECK(same_set(candidate_poles(3, 1.0),
                 {{-0.5, 0.8660}, {-0.5, -0.8660}, {-1, 0}, {0.5, 0.8660}, {0.5, -0.8660}, {1, 0}},
                 1e-4));
  CHECK_THROWS_AS(candidate_poles(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(candidate_poles(2, 0.0), std::invalid_argument);
}

TEST_CASE("candidates agree with the closed form and lie on one circle") {
  for (int p = 1; p <= 9; ++p) {
    for (double r : {0.5, 1.0, 2.0, 1.0338}) {
      const auto got = candidate_poles(p, r);
      REQUIRE(got.size() == 2u * p);
      CHECK(same_set(got, oracle::butterworth_circle(p, r), 1e-12));
      for (const auto& w : got) CHECK(std::abs(std::abs(w) - r) <= 1e-12);
    }
  }
}

TEST_CASE("candidate set symmetries") {
  for (int p = 1; p <= 9; ++p) {
    for (int q_den = 1; q_den <= 12; ++q_den) {
      const auto all = classified_candidates(p, q_den, 1.3);
      for (const auto& w : all) {
        auto conj = std::find_if(all.begin(), all.end(), [&](const WPole& o) {
          return std::abs(o.value - std::conj(w.value)) <= 1e-12;
        });
        REQUIRE(conj != all.end());
        CHECK(conj->kind == w.kind);
        auto mirror = std::find_if(all.begin(), all.end(), [&](const WPole& o) {
          return std::abs(o.value + w.value) <= 1e-12;
        });
        CHECK(mirror != all.end());
      }
    }
  }
}

TEST_CASE("angle law: |arg| multiset equals |+-pi/2 + (2k-1)pi/2P| folded to [0, pi]") {
  for (int p = 1; p <= 9; ++p) {
    std::vector<double> expected;
    for (int k = 1; k <= p; ++k) {
      for (double s : {1.0, -1.0}) {
        double a = s * kPi / 2.0 + (2 * k - 1) * kPi / (2.0 * p);
        a = std::remainder(a, 2.0 * kPi);
        expected.push_back(std::abs(a));
      }
    }
    std::vector<double> got;
    for (const auto& w : classified_candidates(p, 1, 1.0)) got.push_back(w.arg_abs);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("classify_pole examples") {
  CHECK(classify_pole({-1, 0}, 10).kind == PoleClass::UltraDamped);
  CHECK(classify_pole({1, 0}, 10).kind == PoleClass::Unstable);
  // arg = pi/4 = q pi/2 exactly when q = 1/2.
  CHECK(classify_pole({0.7071, 0.7071}, 2).kind == PoleClass::Marginal);
  CHECK(classify_pole({0.7071, 0.7071}, 3).kind == PoleClass::UnderDamped);
  CHECK(classify_pole({-0.7071, 0.7071}, 3).kind == PoleClass::HyperDamped);
  // The q pi band edge belongs to HyperDamped.
  CHECK(classify_pole(std::polar(1.0, kPi / 3.0), 3).kind == PoleClass::HyperDamped);
}

TEST_CASE("classify_pole rejects bad input") {
  CHECK_THROWS_AS(classify_pole({0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_pole({1, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_pole({1, 0}, 2, 0.0), std::invalid_argument);
}

TEST_CASE("float classification agrees with the exact angle classification") {
  for (int p = 1; p <= 9; ++p) {
    for (int q_den = 1; q_den <= 12; ++q_den) {
      for (const auto& w : classified_candidates(p, q_den, 1.0)) {
        CHECK(classify_pole(w.value, q_den).kind == w.kind);
      }
    }
  }
}

TEST_CASE("stable_poles examples") {
  const auto p4q3 = stable_poles(4, 3, 1.0);
  CHECK(p4q3.stable.size() == 6);
  REQUIRE(p4q3.unstable.size() == 2);
  for (const auto& w : p4q3.unstable) CHECK(w.arg_abs == doctest::Approx(kPi / 8.0));
  CHECK(p4q3.warnings.empty());

  const auto p1q5 = stable_poles(1, 5, 1.0);
  REQUIRE(p1q5.stable.size() == 1);
  CHECK(std::abs(p1q5.stable[0].value - cd{-1, 0}) < 1e-15);

  CHECK(stable_poles(8, 2, 1.0).stable.size() == 12);
  CHECK(stable_poles(8, 2, 1.0).unstable.size() == 4);
}

TEST_CASE("marginal poles are dropped with a warning") {
  const auto set = stable_poles(4, 4, 1.0);
  CHECK(set.marginal.size() == 2);
  CHECK(set.stable.size() == 6);
  REQUIRE(set.warnings.size() == 1);
  CHECK(set.warnings[0].find("marginal") != std::string::npos);

  CHECK(stable_poles(2, 2, 1.0).marginal.size() == 2);
}

TEST_CASE("stable set is conjugate-closed and canonically ordered") {
  for (int p = 1; p <= 9; ++p) {
    for (int q_den = 1; q_den <= 12; ++q_den) {
      const auto set = stable_poles(p, q_den, 1.0);
      const auto& s = set.stable;
      for (std::size_t i = 1; i < s.size(); ++i) {
        const bool desc = s[i - 1].arg_abs > s[i].arg_abs + 1e-12;
        const bool tie = std::abs(s[i - 1].arg_abs - s[i].arg_abs) <= 1e-12;
        CHECK((desc || (tie && s[i - 1].value.imag() < s[i].value.imag())));
      }
      for (const auto& w : s) {
        CHECK(std::any_of(s.begin(), s.end(),
                          [&](const WPole& o) { return std::abs(o.value - std::conj(w.value)) < 1e-12; }));
      }
      CHECK(set.stable.size() + set.marginal.size() + set.unstable.size() == 2u * p);
    }
  }
}

TEST_CASE("stability census examples") {
  // Angles for P = 3 are 0, pi/3 (x2), 2pi/3 (x2), pi. At Q = 5 (q pi = pi/5)
  // both pairs sit beyond q pi, and the arg-0 candidate is always unstable.
  CHECK(stability_census(3, 5) == StabilityCensus{1, 0, 0, 4, 1});
  // At Q = 2 the split is two under-damped, two hyper-damped, one ultra-damped.
  CHECK(stability_census(3, 2) == StabilityCensus{1, 0, 2, 2, 1});
  CHECK(stability_census(6, 4).unstable == 2);
  CHECK(stability_census(1, 1) == StabilityCensus{1, 0, 0, 0, 1});
  CHECK(stability_census(2, 3) == StabilityCensus{0, 0, 2, 2, 0});
  // pi/8 pairs fall inside q pi = pi/5; the 3pi/8, 5pi/8, 7pi/8 pairs lie beyond it.
  CHECK(stability_census(4, 5) == StabilityCensus{0, 0, 2, 6, 0});
}

TEST_CASE("census matches a brute-force float classification") {
  for (int p = 1; p <= 9; ++p) {
    for (int q_den = 1; q_den <= 12; ++q_den) {
      StabilityCensus brute;
      const double half = kPi / (2.0 * q_den);
      for (const auto& w : oracle::butterworth_circle(p, 1.0)) {
        const double a = std::abs(std::arg(w));
        if (std::abs(a - half) < 1e-9) ++brute.marginal;
        else if (a < half) ++brute.unstable;
        else if (std::abs(a - kPi) < 1e-9) ++brute.ultra_damped;
        else if (a < 2.0 * half - 1e-9) ++brute.under_damped;
        else ++brute.hyper_damped;
      }
      CHECK(stability_census(p, q_den) == brute);
    }
  }
}

TEST_CASE("stability is monotone in Q") {
  for (int p = 1; p <= 9; ++p) {
    for (int q0 = 1; q0 < 12; ++q0) {
      const auto a = classified_candidates(p, q0, 1.0);
      const auto b = classified_candidates(p, q0 + 1, 1.0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        // Same canonical order at every Q: ordering depends only on angles.
        CHECK(std::abs(a[i].value - b[i].value) < 1e-15);
        if (is_stable(a[i].kind)) CHECK(is_stable(b[i].kind));
      }
    }
  }
}

TEST_CASE("Q = 1 keeps exactly the left-half-plane Butterworth poles") {
  for (int p = 1; p <= 9; ++p) {
    const auto set = stable_poles(p, 1, 1.0);
    CHECK(set.stable.size() == static_cast<std::size_t>(p));
    CHECK(set.marginal.empty());
    for (const auto& w : set.stable) CHECK(w.value.real() < 0.0);
  }
}

TEST_CASE("first strictly stable Q per P") {
  // Frozen from oracle::first_strictly_stable_q and re-derived below.
  const int expected[] = {1, 3, 2, 5, 3, 7, 4, 9, 5};
  for (int p = 1; p <= 9; ++p) {
    CHECK(first_stable_q(p) == expected[p - 1]);
    CHECK(first_stable_q(p) == oracle::first_strictly_stable_q(p));
  }
}

TEST_CASE("pole class names round-trip") {
  for (auto c : {PoleClass::Unstable, PoleClass::Marginal, PoleClass::UnderDamped,
                 PoleClass::HyperDamped, PoleClass::UltraDamped}) {
    CHECK(parse_pole_class(to_string(c)) == c);
  }
  CHECK_FALSE(parse_pole_class("bogus").has_value());
}

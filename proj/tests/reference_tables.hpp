#pragma once

// Published pole and factor values (4 significant decimals) used as fixtures.

#include <complex>
#include <vector>

namespace reference {

struct PoleRow {
  int q_den;
  int p;
  std::vector<std::complex<double>> poles;
};

// Stable unit-radius w-plane poles per (Q, P).
inline std::vector<PoleRow> table2() {
  const double h = 0.7071;
  const std::vector<std::complex<double>> p1 = {{-1, 0}};
  const std::vector<std::complex<double>> p2 = {{-h, h}, {-h, -h}, {h, -h}, {h, h}};
  const std::vector<std::complex<double>> p3 = {
      {-0.5, 0.8660}, {-1, 0}, {-0.5, -0.8660}, {0.5, -0.8660}, {0.5, 0.8660}};
  const std::vector<std::complex<double>> p4 = {
      {-0.3827, 0.9239}, {-0.9239, 0.3827}, {-0.9239, -0.3827}, {-0.3827, -0.9239},
      {0.3827, -0.9239}, {0.9239, -0.3827}, {0.9239, 0.3827},   {0.3827, 0.9239}};
  return {{2, 1, p1}, {3, 1, p1}, {3, 2, p2}, {4, 1, p1}, {4, 2, p2}, {4, 3, p3},
          {5, 1, p1}, {5, 2, p2}, {5, 3, p3}, {5, 4, p4}};
}

// |middle coefficient| of each +/- quadratic pair, per P = 1..9.
inline std::vector<std::vector<double>> table3_middle() {
  return {{},
          {1.414},
          {1.0},
          {0.7654, 1.848},
          {1.618, 0.618},
          {1.932, 1.414, 0.5176},
          {1.802, 1.247, 0.445},
          {1.962, 1.663, 1.111, 0.3902},
          {1.879, 1.532, 1.0, 0.3472}};
}

}  // namespace reference

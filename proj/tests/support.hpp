// Fixtures and independent oracles shared by the unit and acceptance tests.
#pragma once

#include <cmath>
#include <vector>

#include "mf/measure.hpp"

namespace mf::testing {

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Povm x_basis() {
  const ComplexMatrix i2 = identity(2);
  return Povm::from_matrices({(i2 + pauli_x()) / 2.0, (i2 - pauli_x()) / 2.0}, {"+", "-"});
}

inline DensityMatrix zero_state() { return {2, basis_projector(2, 0)}; }

// Tr(ρ E) by explicit index summation, with no Eigen product in between.
inline double trace_oracle(const ComplexMatrix& rho, const ComplexMatrix& e) {
  Complex acc = 0;
  for (int i = 0; i < rho.rows(); ++i)
    for (int k = 0; k < rho.cols(); ++k) acc += rho(i, k) * e(k, i);
  return acc.real();
}

// Max entrywise distance between effects paired by position.
inline double povm_distance(const Povm& a, const Povm& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, max_abs(a[i] - b[i]));
  return worst;
}

// Searches column-stochastic 2x2 matrices [[a, b], [1-a, 1-b]] on a grid of
// the given step for one mapping z onto x. Returns the best residual found.
inline double grid_best_residual(const Povm& z, const Povm& x, double step) {
  double best = 1e9;
  const int n = static_cast<int>(std::lround(1.0 / step));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double a = i * step, b = j * step;
      const ComplexMatrix x0 = a * z[0] + b * z[1];
      const ComplexMatrix x1 = (1 - a) * z[0] + (1 - b) * z[1];
      best = std::min(best, std::max(max_abs(x0 - x[0]), max_abs(x1 - x[1])));
    }
  return best;
}

// Exhaustive maximum over all deterministic strategies x -> w'.
inline double brute_force_umax(const std::vector<double>& prior, const RealMatrix& q,
                               const RealMatrix& u) {
  const int nx = static_cast<int>(q.rows());
  const int nw = static_cast<int>(q.cols());
  const int ng = static_cast<int>(u.rows());
  std::vector<int> guess(nx, 0);
  double best = -1e300;
  while (true) {
    double value = 0.0;
    for (int x = 0; x < nx; ++x)
      for (int w = 0; w < nw; ++w) value += u(guess[x], w) * q(x, w) * prior[w];
    best = std::max(best, value);
    int pos = 0;
    while (pos < nx && ++guess[pos] == ng) guess[pos++] = 0;
    if (pos == nx) break;
  }
  return best;
}

}  // namespace mf::testing

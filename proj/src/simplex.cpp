#include "mf/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace mf {

namespace {
constexpr double kPivotEps = 1e-9;
constexpr double kRatioTie = 1e-12;
constexpr double kReducedCostEps = 1e-11;
constexpr int kMaxPivots = 100000;
}  // namespace

LpFeasibility find_feasible_point(const RealMatrix& a, const RealVector& b,
                                  double tol) {
  if (a.rows() != b.size())
    throw DimensionError("find_feasible_point: A and b row counts differ");
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  const int cols = n + m;  // originals, then artificials

  // Row i of the tableau holds the constraint, row m the reduced costs.
  RealMatrix t = RealMatrix::Zero(m + 1, cols + 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * a.row(i);
    t(i, n + i) = 1.0;
    t(i, cols) = sign * b(i);
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) t(m, j) = -t.col(j).head(m).sum();
  t(m, cols) = -t.col(cols).head(m).sum();

  LpFeasibility result;
  while (result.pivots < kMaxPivots) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (t(m, j) < -kReducedCostEps) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    // Bland's ratio test, except that among rows whose ratios tie within
    // round-off the largest pivot element wins; tiny pivots wreck the tableau.
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
      if (t(i, enter) > kPivotEps)
        best_ratio = std::min(best_ratio, std::max(0.0, t(i, cols)) / t(i, enter));
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) <= kPivotEps) continue;
      const double ratio = std::max(0.0, t(i, cols)) / t(i, enter);
      if (ratio > best_ratio + kRatioTie * (1.0 + best_ratio)) continue;
      if (leave < 0 || t(i, enter) > t(leave, enter) ||
          (t(i, enter) == t(leave, enter) && basis[i] < basis[leave]))
        leave = i;
    }
    // Phase-1 objective is bounded below by zero, so a column with positive
    // reduced descent always has a positive entry.
    if (leave < 0) break;

    t.row(leave) /= t(leave, enter);
    for (int i = 0; i <= m; ++i)
      if (i != leave && t(i, enter) != 0.0)
        t.row(i) -= t(i, enter) * t.row(leave);
    for (int i = 0; i < m; ++i)
      if (t(i, cols) < 0.0 && t(i, cols) > -1e-11) t(i, cols) = 0.0;
    basis[leave] = enter;
    ++result.pivots;
  }

  result.x = RealVector::Zero(n);
  double artificial = 0.0;
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n)
      result.x(basis[i]) = t(i, cols);
    else
      artificial += std::abs(t(i, cols));
  }
  result.infeasibility = artificial;
  result.feasible = artificial <= tol;
  return result;
}

}  // namespace mf

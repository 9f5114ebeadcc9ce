// Dense phase-1 simplex for feasibility of { x >= 0 : A x = b }.
#pragma once

#include "mf/opalg.hpp"

namespace mf {

struct LpFeasibility {
  bool feasible = false;
  RealVector x;                // a basic solution (meaningful when feasible)
  double infeasibility = 0.0;  // optimal sum of artificial variables
  int pivots = 0;
};

/// Minimises the sum of one artificial variable per row, pivoting with
/// Bland's rule. The system is feasible iff that minimum is <= tol.
LpFeasibility find_feasible_point(const RealMatrix& a, const RealVector& b,
                                  double tol);

}  // namespace mf

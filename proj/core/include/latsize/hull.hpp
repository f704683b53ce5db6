#pragma once

#include "latsize/geometry.hpp"
#include "latsize/width.hpp"

#include <vector>

namespace latsize {

/// Exact membership x in conv(points): feasibility of the convex-combination
/// system, decided by a rational phase-1 simplex with Bland's rule. Handles
/// lower-dimensional hulls with no special casing.
bool hull_contains(const std::vector<Vec>& points, const Vec& x);

/// All lattice points of the convex hull of P, in row-major bounding-box
/// order. Throws BudgetError when the box has more than budget.cells cells.
std::vector<Vec> lattice_points(const LatticePolytope& P, const EnumBudget& budget = {});

/// Points of P that are not in the hull of the remaining points. For a point
/// set in convex position this is the vertex set of the hull.
std::vector<Vec> vertices(const LatticePolytope& P);

/// True iff the only lattice points of P are its vertices.
bool is_empty_polytope(const LatticePolytope& P, const EnumBudget& budget = {});

}  // namespace latsize

#include "latsize/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsize {

namespace {

// Phase-1 simplex with Bland's rule over exact rationals. Decides
// feasibility of  A lambda = b, lambda >= 0  where column j of A is
// [ points[j] ; 1 ] and b = [ x ; 1 ].
bool convex_system_feasible(const std::vector<Vec>& points, const Vec& x) {
  const std::size_t m = points.size();
  const std::size_t nrows = x.size() + 1;
  const std::size_t ncols = m + nrows;  // lambdas then artificials
  std::vector<std::vector<Rational>> t(nrows, std::vector<Rational>(ncols + 1, Rational(0)));

  for (std::size_t i = 0; i < nrows; ++i) {
    const bool last = (i + 1 == nrows);
    Rational b = last ? Rational(1) : Rational(x[i]);
    for (std::size_t j = 0; j < m; ++j)
      t[i][j] = last ? Rational(1) : Rational(points[j][i]);
    if (b < 0) {
      for (std::size_t j = 0; j < m; ++j) t[i][j] = -t[i][j];
      b = -b;
    }
    t[i][m + i] = 1;
    t[i][ncols] = b;
  }

  std::vector<std::size_t> basis(nrows);
  for (std::size_t i = 0; i < nrows; ++i) basis[i] = m + i;

  // Reduced costs for minimizing the sum of artificials.
  std::vector<Rational> cost(ncols, Rational(0));
  for (std::size_t j = 0; j < ncols; ++j) {
    Rational c = (j >= m) ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i < nrows; ++i) c -= t[i][j];
    cost[j] = c;
  }

  for (;;) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (cost[j] < 0) { enter = j; break; }
    if (enter == ncols) break;

    std::size_t leave = nrows;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][ncols] / t[i][enter];
      if (leave == nrows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave]))
        leave = i, best_ratio = ratio;
    }
    if (leave == nrows) break;  // unbounded; cannot happen in phase 1

    const Rational piv = t[leave][enter];
    for (std::size_t j = 0; j <= ncols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational fc = cost[enter];
    if (fc != 0)
      for (std::size_t j = 0; j < ncols; ++j) cost[j] -= fc * t[leave][j];
    basis[leave] = enter;
  }
  // Feasible iff no artificial variable carries value at the optimum.
  Rational obj = 0;
  for (std::size_t i = 0; i < nrows; ++i)
    if (basis[i] >= m) obj += t[i][ncols];
  return obj == 0;
}

}  // namespace

bool hull_contains(const std::vector<Vec>& points, const Vec& x) {
  if (points.empty()) return false;
  checks::require_same_dim(static_cast<int>(points.front().size()),
                           static_cast<int>(x.size()), "hull_contains");
  return convex_system_feasible(points, x);
}

std::vector<Vec> lattice_points(const LatticePolytope& P, const EnumBudget& budget) {
  const int n = P.dim();
  Vec lo = P.points().front(), hi = P.points().front();
  for (const Vec& p : P.points()) {
    for (int i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      lo[idx] = std::min(lo[idx], p[idx]);
      hi[idx] = std::max(hi[idx], p[idx]);
    }
  }
  Int cells = 1;
  for (int i = 0; i < n; ++i) cells *= hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)] + 1;
  if (cells > budget.cells)
    throw BudgetError("lattice_points: bounding box has " + cells.str() +
                      " cells, budget is " + std::to_string(budget.cells));

  std::vector<Vec> out;
  Vec x = lo;
  for (;;) {
    if (hull_contains(P.points(), x)) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == hi[static_cast<std::size_t>(i)]) --i;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) x[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
  }
  return out;  // lexicographically sorted by construction
}

std::vector<Vec> vertices(const LatticePolytope& P) {
  std::vector<Vec> out;
  const auto& pts = P.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vec> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (others.empty() || !hull_contains(others, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

bool is_empty_polytope(const LatticePolytope& P, const EnumBudget& budget) {
  std::vector<Vec> lp = lattice_points(P, budget);
  std::vector<Vec> vs = vertices(P);
  std::sort(vs.begin(), vs.end());
  return lp == vs;  // lattice_points is sorted already
}

}  // namespace latsize

#include "latsize/width.hpp"

#include "latsize/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsize {

namespace {

// n linearly independent difference vectors of points of P, or fewer if the
// point set is degenerate.
Mat independent_differences(const LatticePolytope& P) {
  const int n = P.dim();
  const Vec& base = P.points().front();
  Mat picked;
  for (std::size_t i = 1; i < P.points().size() && static_cast<int>(picked.size()) < n; ++i) {
    Vec u = sub(P.points()[i], base);
    if (is_zero(u)) continue;
    picked.push_back(std::move(u));
    if (rank(picked) < static_cast<int>(picked.size())) picked.pop_back();
  }
  return picked;
}

}  // namespace

std::vector<Direction> directions_with_width_at_most(const LatticePolytope& P,
                                                     const Int& bound,
                                                     const EnumBudget& budget) {
  const int n = P.dim();
  if (bound < 0) return {};
  Mat U = independent_differences(P);
  if (static_cast<int>(U.size()) < n)
    throw std::invalid_argument(
        "directions_with_width_at_most: polytope is not full-dimensional");

  const Int det_u = determinant(U);
  const Mat adj = adjugate(U);  // U^{-1} = adj / det_u

  // Dual box: z = U h runs over [-bound, bound]^n. Enumerating z with its
  // first nonzero entry positive visits each +-h pair once.
  Int cells = 1;
  const Int side = 2 * bound + 1;
  for (int i = 0; i < n; ++i) cells *= side;
  if (cells > budget.cells)
    throw BudgetError("directions_with_width_at_most: dual box has " + cells.str() +
                      " cells, budget is " + std::to_string(budget.cells));

  std::vector<Direction> out;
  Vec z(static_cast<std::size_t>(n), Int(0));
  // Odometer over the box, skipping the -z half.
  const auto advance = [&]() -> bool {
    for (int i = n - 1; i >= 0; --i) {
      if (z[static_cast<std::size_t>(i)] < bound) {
        ++z[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) z[static_cast<std::size_t>(j)] = -bound;
        return true;
      }
    }
    return false;
  };
  // Start from the first z whose leading nonzero is positive: all-zero, then
  // increment; the skip below rejects the negative-leading half.
  while (advance()) {
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (z[static_cast<std::size_t>(i)] != 0) { lead = i; break; }
    if (lead < 0 || z[static_cast<std::size_t>(lead)] < 0) continue;

    // h = adj * z / det_u, kept only when integral.
    Vec h(static_cast<std::size_t>(n));
    bool integral = true;
    for (int i = 0; i < n && integral; ++i) {
      Int s = dot(adj[static_cast<std::size_t>(i)], z);
      if (s % det_u != 0) integral = false;
      else h[static_cast<std::size_t>(i)] = s / det_u;
    }
    if (!integral || is_zero(h)) continue;
    if (content(h) != 1) continue;
    Direction d(sign_normalize(std::move(h)));
    if (width_in_direction(P, d) <= bound) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WidthResult lattice_width(const LatticePolytope& P, const EnumBudget& budget,
                          bool collect_minimizers) {
  const int n = P.dim();
  Mat U = independent_differences(P);
  if (static_cast<int>(U.size()) < n) {
    // Degenerate: any primitive normal of the affine hull has width 0.
    std::optional<Vec> normal = integer_kernel_vector(U, n);
    if (!normal) normal = unit_vec(n, 0);  // single point
    Direction w(*normal);
    return WidthResult{Int(0), w, {w}};
  }

  // Upper bound attained by a coordinate direction; the dual box at this
  // radius contains every direction at least as narrow.
  Int best = width_in_direction(P, Direction(unit_vec(n, 0)));
  for (int i = 1; i < n; ++i)
    best = std::min(best, width_in_direction(P, Direction(unit_vec(n, i))));

  std::vector<Direction> cands = directions_with_width_at_most(P, best, budget);
  std::optional<Direction> witness;
  std::vector<Direction> minimizers;
  for (const Direction& h : cands) {
    Int w = width_in_direction(P, h);
    if (w < best || !witness) {
      best = w;
      witness = h;
      minimizers.clear();
      minimizers.push_back(h);
    } else if (w == best) {
      minimizers.push_back(h);
      if (h < *witness) witness = h;
    }
  }
  // cands is nonempty: the minimizing coordinate direction is in it.
  if (!collect_minimizers) minimizers.clear();
  return WidthResult{best, *witness, std::move(minimizers)};
}

}  // namespace latsize

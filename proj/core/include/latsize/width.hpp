#pragma once

#include "latsize/geometry.hpp"

#include <cstdint>
#include <vector>

namespace latsize {

/// Cap on enumeration loops (cells of a bounding box, points of a dual box).
/// Desk-scale inputs never get near the default.
struct EnumBudget {
  std::uint64_t cells = 10'000'000;
};

/// Complete list of primitive directions h with w_h(P) <= bound, one
/// representative per +-h pair (first nonzero entry positive), sorted
/// lexicographically.
///
/// Completeness: pick n linearly independent difference vectors u_1..u_n of
/// points of P. Any h with w_h(P) <= bound satisfies |<h,u_i>| <= bound, so
/// z = U h ranges over [-bound, bound]^n and h = U^{-1} z is recovered
/// exactly over the rationals; non-integral and non-primitive solutions are
/// discarded, as are directions whose true width exceeds the bound.
///
/// Requires P full-dimensional; throws std::invalid_argument otherwise and
/// BudgetError when the dual box exceeds budget.cells.
std::vector<Direction> directions_with_width_at_most(const LatticePolytope& P,
                                                     const Int& bound,
                                                     const EnumBudget& budget = {});

struct WidthResult {
  Int width;
  Direction witness;
  /// Every width-minimizing primitive direction (up to sign) when requested.
  std::vector<Direction> minimizers;
};

/// Lattice width: minimum of w_h(P) over nonzero integer h, with a witness.
/// Restricting to primitive h loses nothing since w_{ch} = |c| w_h. The
/// witness is the lexicographically smallest sign-normalized minimizer.
/// Degenerate P (affine hull below full dimension) has width 0 with a
/// witness normal to the affine hull.
WidthResult lattice_width(const LatticePolytope& P, const EnumBudget& budget = {},
                          bool collect_minimizers = false);

}  // namespace latsize

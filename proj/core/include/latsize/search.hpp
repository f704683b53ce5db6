#pragma once

#include "latsize/geometry.hpp"
#include "latsize/width.hpp"

#include <cstdint>
#include <optional>

namespace latsize {

struct SearchConfig {
  /// Known upper bound on the answer, e.g. from an explicit certificate.
  /// Caps the deepening; the search still proves every level below it.
  std::optional<Int> initial_upper_bound;
  /// Partial matrices assembled before the search gives up and returns the
  /// best known upper bound as a non-certified result.
  std::uint64_t node_budget = 100'000'000;
  /// When true (default) the witness containment is re-checked post hoc
  /// before the result is returned.
  bool report_witness = true;
  /// When false, disables every pruning rule and keeps only the candidate
  /// width filter plus the exact determinant and objective tests. Values
  /// must not change; node counts will. Regression knob for that invariant.
  bool prune = true;
  EnumBudget enum_budget{};
};

struct SearchResult {
  Int value;
  AffineUnimodularMap witness;  // translation places the image in the target
  std::uint64_t nodes_explored = 0;
  std::uint64_t candidates_considered = 0;
  /// True when every bound below value was exhaustively ruled out, so value
  /// is the exact minimum. False only after a node-budget bailout.
  bool certified = false;
};

/// Exact lattice size with respect to the standard simplex: the minimum of
/// l1(A P) over unimodular A. Iterative deepening on the bound B; at each
/// level the candidate rows are the complete set of primitive directions of
/// width <= B (every row and row-subset-sum of a feasible matrix has width
/// <= l1(A P)), assembled index-increasing with both signs, pruned by rank,
/// subset-sum widths and the monotone partial l1, and accepted on an exact
/// determinant and l1 check. Requires P full-dimensional.
SearchResult ls_delta(const LatticePolytope& P, const SearchConfig& cfg = {});

/// Exact lattice size with respect to the unit cube: the smallest B such
/// that n candidate rows of width <= B form a matrix of determinant +-1.
SearchResult ls_cube(const LatticePolytope& P, const SearchConfig& cfg = {});

/// The complete level-B candidate row set (sign-normalized, sorted).
std::vector<Direction> candidate_rows(const LatticePolytope& P, const Int& B,
                                      const EnumBudget& budget = {});

}  // namespace latsize

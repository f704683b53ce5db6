#pragma once

#include "latsize/geometry.hpp"

#include <chrono>

namespace latsize {

struct OracleConfig {
  /// Matrix entries range over [-entry_bound, entry_bound].
  Int entry_bound = 2;
  std::chrono::milliseconds time_budget = std::chrono::minutes(10);
};

/// Minimum of l1(A P) over ALL integer matrices with entries in
/// [-M, M] and determinant +-1, by direct row-major enumeration with no
/// pruning beyond the determinant test. An upper bound on ls_delta that is
/// exact whenever some optimal witness has entries within M. Dimensions 1-3
/// only; throws BudgetError past the time budget.
Int oracle_ls_delta(const LatticePolytope& P, const OracleConfig& cfg);

/// Same enumeration, minimizing the maximum coordinate width of A P.
Int oracle_ls_cube(const LatticePolytope& P, const OracleConfig& cfg);

/// Minimum width over all nonzero h with entries in [-bound, bound].
Int oracle_width(const LatticePolytope& P, const Int& bound);

}  // namespace latsize

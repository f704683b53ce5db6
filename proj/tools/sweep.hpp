#pragma once

#include "latsize/ints.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latsize::cli {

struct ParamRange {
  Int lo, hi;  // inclusive
};

struct SweepSpec {
  int d = 2;
  std::vector<ParamRange> ranges;  // one per parameter
  bool in_scope_only = false;
  bool coprime_only = false;
};

struct SweepOptions {
  bool run_oracle = false;
  std::optional<Int> oracle_entry_bound;  // default: max witness entry + 1
  std::uint64_t node_budget = 100'000'000;
  std::uint64_t enum_cells = 10'000'000;
  long long time_budget_ms = 600'000;
  int threads = 1;
};

/// One row of the verification table. Empty optionals render as empty CSV
/// cells / JSON nulls.
struct VerifyRow {
  std::vector<Int> params;
  Int alpha;
  std::optional<Int> k;
  bool in_scope = false;
  std::optional<Int> ls_delta_formula;
  std::optional<Int> ls_delta_search;
  std::optional<Int> ls_cube_formula;
  std::optional<Int> ls_cube_search;
  std::optional<Int> oracle_ls_delta;
  std::optional<Int> oracle_ls_cube;
  /// "yes" / "no" in scope; "oos-agree" / "oos-differ" when the formula is
  /// defined but unproven; "n/a" when k is undefined; "budget" when the
  /// search gave up.
  std::string match;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool with_oracle = false;
  bool any_mismatch = false;   // an in-scope row with match == "no"
  bool any_budget = false;
};

/// Runs the sweep; deterministic for any thread count (rows are computed
/// independently and emitted in tuple order).
VerifyReport run_verify_sweep(const SweepSpec& spec, const SweepOptions& opts);

std::string render_csv(const VerifyReport& report);
std::string render_json(const VerifyReport& report);
std::string render_human(const VerifyReport& report);

}  // namespace latsize::cli

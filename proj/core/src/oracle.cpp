#include "latsize/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace latsize {

namespace {

using Clock = std::chrono::steady_clock;

enum class Objective { Simplex, Cube };

// All (2M+1)^n integer vectors, row-major lexicographic.
std::vector<Vec> all_rows(int n, const Int& M) {
  std::vector<Vec> rows;
  Vec v(static_cast<std::size_t>(n), Int(-M));
  for (;;) {
    rows.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == M) --i;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) v[static_cast<std::size_t>(j)] = -M;
  }
  return rows;
}

Int score(const std::vector<Vec>& rows, const std::vector<Vec>& pts, Objective obj) {
  const std::size_t n = rows.size();
  if (obj == Objective::Cube) {
    Int worst = 0;
    for (const Vec& r : rows) {
      Int lo = dot(r, pts[0]), hi = lo;
      for (std::size_t p = 1; p < pts.size(); ++p) {
        Int v = dot(r, pts[p]);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
      }
      worst = std::max(worst, Int(hi - lo));
    }
    return worst;
  }
  // l1 of the image: max coordinate sum minus the per-coordinate minima.
  Int max_sum = 0;
  Vec mins(n);
  bool first = true;
  for (const Vec& p : pts) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Int v = dot(rows[i], p);
      s += v;
      if (first || v < mins[i]) mins[i] = v;
    }
    if (first || s > max_sum) max_sum = s;
    first = false;
  }
  Int sum_mins = 0;
  for (const Int& m : mins) sum_mins += m;
  return max_sum - sum_mins;
}

Int enumerate(const LatticePolytope& P, const OracleConfig& cfg, Objective obj) {
  const int n = P.dim();
  if (n > 3)
    throw std::invalid_argument("oracle: matrix enumeration supports dimensions 1-3");
  if (cfg.entry_bound < 1) throw std::invalid_argument("oracle: entry_bound must be >= 1");
  const auto deadline = Clock::now() + cfg.time_budget;
  const std::vector<Vec> rows = all_rows(n, cfg.entry_bound);
  const auto& pts = P.points();

  std::optional<Int> best;
  const auto consider = [&](const std::vector<Vec>& m) {
    Int s = score(m, pts, obj);
    if (!best || s < *best) best = s;
  };

  if (n == 1) {
    for (const Vec& r : rows) {
      if (r[0] == 1 || r[0] == -1) consider({r});
    }
  } else if (n == 2) {
    for (const Vec& r1 : rows) {
      if (Clock::now() > deadline) throw BudgetError("oracle: time budget exceeded");
      for (const Vec& r2 : rows) {
        Int det = r1[0] * r2[1] - r1[1] * r2[0];
        if (det == 1 || det == -1) consider({r1, r2});
      }
    }
  } else {
    for (const Vec& r1 : rows) {
      for (const Vec& r2 : rows) {
        if (Clock::now() > deadline) throw BudgetError("oracle: time budget exceeded");
        const Vec cross{r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
                        r1[0] * r2[1] - r1[1] * r2[0]};
        for (const Vec& r3 : rows) {
          Int det = cross[0] * r3[0] + cross[1] * r3[1] + cross[2] * r3[2];
          if (det == 1 || det == -1) consider({r1, r2, r3});
        }
      }
    }
  }
  if (!best) throw std::logic_error("oracle: no unimodular matrix found");
  return *best;
}

}  // namespace

Int oracle_ls_delta(const LatticePolytope& P, const OracleConfig& cfg) {
  return enumerate(P, cfg, Objective::Simplex);
}

Int oracle_ls_cube(const LatticePolytope& P, const OracleConfig& cfg) {
  return enumerate(P, cfg, Objective::Cube);
}

Int oracle_width(const LatticePolytope& P, const Int& bound) {
  if (bound < 1) throw std::invalid_argument("oracle_width: bound must be >= 1");
  const int n = P.dim();
  std::optional<Int> best;
  Vec h(static_cast<std::size_t>(n), Int(-bound));
  for (;;) {
    if (!is_zero(h)) {
      Int w = width_in_direction(P, Direction(h));
      if (!best || w < *best) best = w;
    }
    int i = n - 1;
    while (i >= 0 && h[static_cast<std::size_t>(i)] == bound) --i;
    if (i < 0) break;
    ++h[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) h[static_cast<std::size_t>(j)] = -bound;
  }
  return *best;
}

}  // namespace latsize

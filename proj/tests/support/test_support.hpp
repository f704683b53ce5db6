#pragma once
#include <algorithm>

#include "latsize/family.hpp"
#include "latsize/geometry.hpp"
#include "latsize/linalg.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace latsize::testing {

inline Vec V(std::initializer_list<long long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

inline LatticePolytope P(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> pts;
  for (const auto& r : rows) pts.push_back(V(r));
  return LatticePolytope(std::move(pts));
}

inline FamilyParams params(std::initializer_list<long long> ps) {
  std::vector<Int> p;
  for (long long x : ps) p.push_back(Int(x));
  return FamilyParams(std::move(p));
}

inline LatticePolytope family(std::initializer_list<long long> ps) {
  return family_simplex(params(ps));
}

/// conv{0, e_1, ..., e_n}, optionally dilated.
inline LatticePolytope standard_simplex(int n, long long dilate = 1) {
  std::vector<Vec> pts{zero_vec(n)};
  for (int i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[static_cast<std::size_t>(i)] = dilate;
    pts.push_back(std::move(e));
  }
  return LatticePolytope(std::move(pts));
}

inline LatticePolytope unit_cube(int n) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec p = zero_vec(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) p[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(p));
  }
  return LatticePolytope(std::move(pts));
}

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long long pick(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
  }

  Vec vec(int n, long long lo, long long hi) {
    Vec v(static_cast<std::size_t>(n));
    for (auto& x : v) x = Int(pick(lo, hi));
    return v;
  }

  Vec nonzero_vec(int n, long long lo, long long hi) {
    for (;;) {
      Vec v = vec(n, lo, hi);
      if (!is_zero(v)) return v;
    }
  }

  /// Random full-dimensional polytope with coordinates in [lo, hi].
  LatticePolytope polytope(int n, int npts, long long lo, long long hi);

  /// Random unimodular matrix built from elementary operations, with every
  /// entry kept within [-max_entry, max_entry].
  Mat unimodular(int n, long long max_entry = 5);

  std::mt19937_64 gen;
};

inline LatticePolytope Rng::polytope(int n, int npts, long long lo, long long hi) {
  npts = std::max(npts, n + 1);  // fewer points can never be full-dimensional
  for (;;) {
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(npts));
    for (int i = 0; i < npts; ++i) pts.push_back(vec(n, lo, hi));
    LatticePolytope cand(std::move(pts));
    // Keep only full-dimensional samples: n independent differences exist.
    Mat diffs;
    for (std::size_t i = 1; i < cand.points().size(); ++i)
      diffs.push_back(sub(cand.points()[i], cand.points()[0]));
    if (static_cast<int>(diffs.size()) >= n && rank(diffs) == n) return cand;
  }
}

inline Mat Rng::unimodular(int n, long long max_entry) {
  for (;;) {
    Mat m;
    for (int i = 0; i < n; ++i) m.push_back(unit_vec(n, i));
    const int ops = static_cast<int>(pick(n, 3 * n));
    for (int o = 0; o < ops; ++o) {
      const auto i = static_cast<std::size_t>(pick(0, n - 1));
      const auto j = static_cast<std::size_t>(pick(0, n - 1));
      switch (pick(0, 2)) {
        case 0: {
          if (i == j) break;
          const Int c(pick(-2, 2));
          for (int c2 = 0; c2 < n; ++c2)
            m[i][static_cast<std::size_t>(c2)] += c * m[j][static_cast<std::size_t>(c2)];
          break;
        }
        case 1:
          std::swap(m[i], m[j]);
          break;
        default:
          for (auto& x : m[i]) x = -x;
      }
    }
    bool small = true;
    for (const Vec& row : m)
      for (const Int& x : row)
        if (abs_int(x) > max_entry) small = false;
    if (small) return m;
  }
}

}  // namespace latsize::testing

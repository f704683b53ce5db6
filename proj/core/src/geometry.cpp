#include "latsize/geometry.hpp"

#include "latsize/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsize {

namespace checks {
void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}
}  // namespace checks

Direction::Direction(Vec coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("Direction: empty vector");
  if (is_zero(coords_)) throw std::invalid_argument("Direction: zero vector");
}

LatticePolytope::LatticePolytope(std::vector<Vec> points) {
  if (points.empty()) throw std::invalid_argument("LatticePolytope: no points");
  dim_ = static_cast<int>(points.front().size());
  if (dim_ < 1) throw std::invalid_argument("LatticePolytope: dimension must be >= 1");
  points_.reserve(points.size());
  for (Vec& p : points) {
    checks::require_same_dim(static_cast<int>(p.size()), dim_, "LatticePolytope");
    if (std::find(points_.begin(), points_.end(), p) == points_.end())
      points_.push_back(std::move(p));
  }
}

LatticePolytope LatticePolytope::translated(const Vec& t) const {
  checks::require_same_dim(static_cast<int>(t.size()), dim_, "translate");
  std::vector<Vec> out;
  out.reserve(points_.size());
  for (const Vec& p : points_) out.push_back(add(p, t));
  return LatticePolytope(std::move(out));
}

bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim_ != b.dim_ || a.points_.size() != b.points_.size()) return false;
  std::vector<Vec> pa = a.points_, pb = b.points_;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

AffineUnimodularMap::AffineUnimodularMap(Mat matrix, Vec translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  const auto n = matrix_.size();
  if (n == 0) throw std::invalid_argument("AffineUnimodularMap: empty matrix");
  for (const Vec& row : matrix_)
    checks::require_same_dim(static_cast<int>(row.size()), static_cast<int>(n),
                             "AffineUnimodularMap: matrix must be square");
  checks::require_same_dim(static_cast<int>(translation_.size()), static_cast<int>(n),
                           "AffineUnimodularMap: translation");
  det_ = determinant(matrix_);
  if (det_ != 1 && det_ != -1)
    throw std::invalid_argument("AffineUnimodularMap: determinant is " + det_.str() +
                                ", must be +-1");
}

AffineUnimodularMap AffineUnimodularMap::identity(int n) {
  Mat m;
  m.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.push_back(unit_vec(n, i));
  return AffineUnimodularMap(std::move(m), zero_vec(n));
}

AffineUnimodularMap AffineUnimodularMap::with_translation(Vec t) const {
  return AffineUnimodularMap(matrix_, std::move(t));
}

Int width_in_direction(const LatticePolytope& P, const Direction& h) {
  checks::require_same_dim(P.dim(), h.dim(), "width_in_direction");
  bool first = true;
  Int lo = 0, hi = 0;
  for (const Vec& p : P.points()) {
    Int v = dot(h.coords(), p);
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return hi - lo;
}

Int l1(const LatticePolytope& P) {
  const auto& pts = P.points();
  Int max_sum = 0;
  bool first = true;
  Vec mins(pts.front().size());
  for (const Vec& p : pts) {
    Int s = 0;
    for (const Int& x : p) s += x;
    if (first || s > max_sum) max_sum = s;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (first || p[i] < mins[i]) mins[i] = p[i];
    first = false;
  }
  Int sum_mins = 0;
  for (const Int& m : mins) sum_mins += m;
  return max_sum - sum_mins;
}

LatticePolytope apply_map(const AffineUnimodularMap& L, const LatticePolytope& P) {
  checks::require_same_dim(L.dim(), P.dim(), "apply_map");
  std::vector<Vec> out;
  out.reserve(P.points().size());
  for (const Vec& p : P.points()) {
    Vec q(L.matrix().size());
    for (std::size_t i = 0; i < L.matrix().size(); ++i)
      q[i] = dot(L.matrix()[i], p) + L.translation()[i];
    out.push_back(std::move(q));
  }
  return LatticePolytope(std::move(out));
}

Direction pullback_direction(const Mat& A, const Direction& h) {
  if (A.empty()) throw std::invalid_argument("pullback_direction: empty matrix");
  checks::require_same_dim(static_cast<int>(A.size()), h.dim(), "pullback_direction");
  const std::size_t n = A.size();
  Vec r(n, Int(0));
  for (std::size_t j = 0; j < n; ++j) {
    checks::require_same_dim(static_cast<int>(A[j].size()), static_cast<int>(n),
                             "pullback_direction: matrix must be square");
    for (std::size_t i = 0; i < n; ++i) r[i] += A[j][i] * h.coords()[j];
  }
  return Direction(std::move(r));
}

bool is_primitive(const Direction& h) { return content(h.coords()) == 1; }

Int lattice_length(const Vec& a, const Vec& b) {
  checks::require_same_dim(static_cast<int>(a.size()), static_cast<int>(b.size()),
                           "lattice_length");
  return content(sub(b, a));
}

}  // namespace latsize

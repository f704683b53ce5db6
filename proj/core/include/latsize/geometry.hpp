#pragma once

#include "latsize/ints.hpp"

#include <optional>
#include <vector>

namespace latsize {

/// A nonzero integer vector used as a linear functional on lattice points.
class Direction {
 public:
  explicit Direction(Vec coords);

  const Vec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  friend bool operator==(const Direction& a, const Direction& b) {
    return a.coords_ == b.coords_;
  }
  friend auto operator<=>(const Direction& a, const Direction& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  Vec coords_;
};

/// Finite set of lattice points, identified with their convex hull. Points
/// need not be the vertex set: every operation here is extremal over any
/// generating set. Duplicates are dropped on construction (first occurrence
/// kept); equality compares the underlying point sets.
class LatticePolytope {
 public:
  explicit LatticePolytope(std::vector<Vec> points);

  int dim() const { return dim_; }
  const std::vector<Vec>& points() const { return points_; }

  LatticePolytope translated(const Vec& t) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b);

 private:
  int dim_;
  std::vector<Vec> points_;
};

/// x -> M x + t with an exact determinant check: M must have det +-1, so the
/// map is invertible over the integer lattice.
class AffineUnimodularMap {
 public:
  AffineUnimodularMap(Mat matrix, Vec translation);

  static AffineUnimodularMap identity(int n);

  const Mat& matrix() const { return matrix_; }
  const Vec& translation() const { return translation_; }
  int dim() const { return static_cast<int>(matrix_.size()); }
  const Int& det() const { return det_; }

  AffineUnimodularMap with_translation(Vec t) const;

 private:
  Mat matrix_;
  Vec translation_;
  Int det_;
};

/// w_h(P): max <h,x> - min <h,x> over the points of P.
Int width_in_direction(const LatticePolytope& P, const Direction& h);

/// max coordinate sum minus the sum of per-coordinate minima; the smallest l
/// such that P fits in l * (standard simplex) after an integer translation.
Int l1(const LatticePolytope& P);

LatticePolytope apply_map(const AffineUnimodularMap& L, const LatticePolytope& P);

/// A^T h, so that width_in_direction(A P, h) == width_in_direction(P, A^T h).
Direction pullback_direction(const Mat& A, const Direction& h);

/// True iff gcd of the coordinate absolute values is 1.
bool is_primitive(const Direction& h);

/// gcd of |b_i - a_i|; the number of lattice points on the segment [a, b]
/// minus one. Zero when a == b.
Int lattice_length(const Vec& a, const Vec& b);

namespace checks {
void require_same_dim(int a, int b, const char* what);
}

}  // namespace latsize

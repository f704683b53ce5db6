// Randomized identities relating widths, l1 and unimodular images. These are
// the working rules behind the candidate filter and the pruning in the
// search engine, so they get their own suite.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latsize/search.hpp"
#include "latsize/width.hpp"
#include "support/test_support.hpp"

#include <algorithm>

using namespace latsize;
using namespace latsize::testing;

namespace {

struct Instance {
  LatticePolytope Q;
  Mat A;
  Direction h;
};

Instance random_instance(Rng& rng) {
  const int n = static_cast<int>(rng.pick(2, 4));
  return Instance{rng.polytope(n, static_cast<int>(rng.pick(3, 6)), -5, 5),
                  rng.unimodular(n), Direction(rng.nonzero_vec(n, -5, 5))};
}

Int l1_of(const Mat& A, const LatticePolytope& Q) {
  return l1(apply_map(AffineUnimodularMap(A, zero_vec(static_cast<int>(A.size()))), Q));
}

}  // namespace

TEST_CASE("pullback identity w_h(AP) = w_{A^T h}(P)") {
  Rng rng(1001);
  for (int iter = 0; iter < 200; ++iter) {
    const Instance in = random_instance(rng);
    const AffineUnimodularMap L(in.A, zero_vec(static_cast<int>(in.A.size())));
    CHECK(width_in_direction(apply_map(L, in.Q), in.h) ==
          width_in_direction(in.Q, pullback_direction(in.A, in.h)));
  }
}

TEST_CASE("0-1 direction widths are at most l1") {
  Rng rng(1002);
  for (int iter = 0; iter < 200; ++iter) {
    const Instance in = random_instance(rng);
    const int n = in.Q.dim();
    for (int mask = 1; mask < (1 << n); ++mask) {
      Vec e = zero_vec(n);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) e[static_cast<std::size_t>(i)] = 1;
      CHECK(width_in_direction(in.Q, Direction(e)) <= l1(in.Q));
    }
  }
}

TEST_CASE("row-subset sums have width at most l1 of the image") {
  Rng rng(1003);
  for (int iter = 0; iter < 200; ++iter) {
    const Instance in = random_instance(rng);
    const int n = in.Q.dim();
    const Int bound = l1_of(in.A, in.Q);
    for (int mask = 1; mask < (1 << n); ++mask) {
      Vec s = zero_vec(n);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s = add(s, in.A[static_cast<std::size_t>(i)]);
      if (is_zero(s)) continue;  // cannot happen for unimodular A
      CHECK(width_in_direction(in.Q, Direction(s)) <= bound);
    }
  }
}

TEST_CASE("l1 of the image via row maxima and minima") {
  Rng rng(1004);
  for (int iter = 0; iter < 200; ++iter) {
    const Instance in = random_instance(rng);
    const int n = in.Q.dim();
    Vec total = zero_vec(n);
    for (const Vec& row : in.A) total = add(total, row);
    Int max_total = dot(total, in.Q.points()[0]);
    for (const Vec& p : in.Q.points()) max_total = std::max(max_total, dot(total, p));
    Int sum_mins = 0;
    for (const Vec& row : in.A) {
      Int mn = dot(row, in.Q.points()[0]);
      for (const Vec& p : in.Q.points()) mn = std::min(mn, dot(row, p));
      sum_mins += mn;
    }
    CHECK(l1_of(in.A, in.Q) == max_total - sum_mins);
  }
}

TEST_CASE("l1 of the image is invariant under row permutations") {
  Rng rng(1005);
  for (int iter = 0; iter < 120; ++iter) {
    const Instance in = random_instance(rng);
    Mat shuffled = in.A;
    std::shuffle(shuffled.begin(), shuffled.end(), rng.gen);
    CHECK(l1_of(in.A, in.Q) == l1_of(shuffled, in.Q));
  }
}

TEST_CASE("replacing the last row by minus the row sum preserves l1") {
  Rng rng(1006);
  for (int iter = 0; iter < 120; ++iter) {
    const Instance in = random_instance(rng);
    const int n = in.Q.dim();
    Mat B = in.A;
    Vec total = zero_vec(n);
    for (const Vec& row : in.A) total = add(total, row);
    B.back() = negate(total);
    CHECK(l1_of(in.A, in.Q) == l1_of(B, in.Q));
    // B is unimodular whenever A is.
    const Int d = determinant(B);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("width and l1 are translation invariant") {
  Rng rng(1007);
  for (int iter = 0; iter < 120; ++iter) {
    const Instance in = random_instance(rng);
    const Vec t = rng.vec(in.Q.dim(), -9, 9);
    CHECK(l1(in.Q) == l1(in.Q.translated(t)));
    CHECK(width_in_direction(in.Q, in.h) == width_in_direction(in.Q.translated(t), in.h));
  }
}

TEST_CASE("lattice width lower-bounds every primitive direction width") {
  Rng rng(1008);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = static_cast<int>(rng.pick(2, 3));
    const LatticePolytope Q = rng.polytope(n, static_cast<int>(rng.pick(3, 5)), -3, 3);
    const Int w = lattice_width(Q).width;
    for (int k = 0; k < 10; ++k) {
      Vec h = rng.nonzero_vec(n, -5, 5);
      const Int g = content(h);
      if (g > 1)
        for (Int& x : h) x /= g;
      CHECK(w <= width_in_direction(Q, Direction(h)));
    }
  }
}

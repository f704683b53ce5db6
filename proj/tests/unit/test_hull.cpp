#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latsize/hull.hpp"
#include "latsize/width.hpp"
#include "support/test_support.hpp"

using namespace latsize;
using namespace latsize::testing;

TEST_CASE("hull_contains") {
  const LatticePolytope tri = P({{0, 0}, {2, 0}, {0, 2}});
  CHECK(hull_contains(tri.points(), V({1, 1})));
  CHECK(hull_contains(tri.points(), V({0, 0})));
  CHECK_FALSE(hull_contains(tri.points(), V({2, 1})));
  CHECK_FALSE(hull_contains(tri.points(), V({-1, 0})));

  // Degenerate hulls restrict membership to the affine hull.
  const std::vector<Vec> seg{V({0, 0, 0}), V({2, 2, 2})};
  CHECK(hull_contains(seg, V({1, 1, 1})));
  CHECK_FALSE(hull_contains(seg, V({1, 1, 0})));
  CHECK_FALSE(hull_contains(seg, V({3, 3, 3})));
}

TEST_CASE("lattice_points") {
  CHECK(lattice_points(standard_simplex(3)).size() == 4);  // the unit simplex is empty

  // Brute-force scan of [0,2]^3: T_{2,2} picks up (1,1,1) on the long edge.
  const auto pts = lattice_points(family({2, 2}));
  CHECK(pts.size() == 5);
  CHECK(std::find(pts.begin(), pts.end(), V({1, 1, 1})) != pts.end());

  CHECK(lattice_points(P({{0, 0}, {2, 0}})).size() == 3);

  EnumBudget tiny;
  tiny.cells = 10;
  CHECK_THROWS_AS(lattice_points(family({3, 4}), tiny), BudgetError);
}

TEST_CASE("vertices") {
  // The center of the square is not a vertex.
  const LatticePolytope sq = P({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
  const auto vs = vertices(sq);
  CHECK(vs.size() == 4);
  CHECK(std::find(vs.begin(), vs.end(), V({1, 1})) == vs.end());

  CHECK(vertices(P({{5, 7}})).size() == 1);
  CHECK(vertices(P({{0, 0}, {3, 0}, {1, 0}})).size() == 2);
}

TEST_CASE("is_empty_polytope") {
  CHECK(is_empty_polytope(family({2, 3})));       // gcd 1
  CHECK_FALSE(is_empty_polytope(family({2, 2}))); // (1,1,1) sits on the long edge
  CHECK(is_empty_polytope(unit_cube(3)));
  CHECK(is_empty_polytope(P({{0, 0}, {1, 0}, {0, 1}})));
  CHECK_FALSE(is_empty_polytope(P({{0, 0}, {2, 0}, {0, 2}})));
}

TEST_CASE("segment emptiness agrees with lattice length") {
  // A segment is empty exactly when it is primitive.
  CHECK(is_empty_polytope(P({{0, 0}, {1, 0}})));
  CHECK(is_empty_polytope(P({{0, 0, 1}, {3, 5, 1}})));
  CHECK_FALSE(is_empty_polytope(P({{0, 0}, {2, 0}})));
  CHECK_FALSE(is_empty_polytope(P({{1, 1, 1}, {4, 7, 1}})));  // gcd 3
}

TEST_CASE("emptiness of the family tracks gcd") {
  for (long long p1 = 0; p1 <= 4; ++p1)
    for (long long p2 = 0; p2 <= 4; ++p2) {
      if (p1 == 0 && p2 == 0) continue;  // degenerate member
      const Int g = boost::multiprecision::gcd(Int(p1), Int(p2));
      CHECK(is_empty_polytope(family({p1, p2})) == (g == 1));
    }
}

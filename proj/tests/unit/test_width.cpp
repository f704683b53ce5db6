#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latsize/oracle.hpp"
#include "latsize/width.hpp"
#include "support/test_support.hpp"

using namespace latsize;
using namespace latsize::testing;

TEST_CASE("directions_with_width_at_most on the unit triangle") {
  const auto dirs = directions_with_width_at_most(standard_simplex(2), 1);
  REQUIRE(dirs.size() == 3);
  CHECK(dirs[0] == Direction(V({0, 1})));
  CHECK(dirs[1] == Direction(V({1, 0})));
  CHECK(dirs[2] == Direction(V({1, 1})));

  CHECK(directions_with_width_at_most(standard_simplex(2), 0).empty());
}

TEST_CASE("enumeration rejects degenerate polytopes and huge boxes") {
  CHECK_THROWS_AS(directions_with_width_at_most(P({{0, 0}, {1, 0}}), 3),
                  std::invalid_argument);
  EnumBudget tiny;
  tiny.cells = 4;
  CHECK_THROWS_AS(directions_with_width_at_most(standard_simplex(2), 1, tiny), BudgetError);
}

TEST_CASE("lattice_width of family members") {
  auto r = lattice_width(family({1, 2, 5}));
  CHECK(r.width == 1);
  auto r13 = lattice_width(family({1, 3}));
  CHECK(r13.width == 1);
  CHECK(r13.witness == Direction(V({0, 0, 1})));
}

TEST_CASE("lattice_width basics") {
  CHECK(lattice_width(standard_simplex(2)).width == 1);
  CHECK(lattice_width(standard_simplex(4)).width == 1);
  CHECK(lattice_width(standard_simplex(2, 2)).width == 2);
  CHECK(lattice_width(unit_cube(3)).width == 1);
}

TEST_CASE("lattice_width of degenerate polytopes is 0 with a normal witness") {
  const auto r = lattice_width(P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(r.width == 0);
  CHECK(r.witness == Direction(V({0, 0, 1})));

  const auto point = lattice_width(P({{3, 4}}));
  CHECK(point.width == 0);
}

TEST_CASE("lattice_width agrees with direct enumeration") {
  Rng rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = static_cast<int>(rng.pick(2, 3));
    const LatticePolytope Q = rng.polytope(n, static_cast<int>(rng.pick(3, 5)), -3, 3);
    const auto lw = lattice_width(Q);
    CHECK(lw.width == oracle_width(Q, 6));
    CHECK(width_in_direction(Q, lw.witness) == lw.width);
  }
}

TEST_CASE("minimizer collection is complete at the optimum") {
  const auto r = lattice_width(unit_cube(2), {}, /*collect_minimizers=*/true);
  CHECK(r.width == 1);
  // e_1 and e_2 both achieve width 1 on the unit square; diagonals do not.
  CHECK(r.minimizers.size() == 2);
  CHECK(r.witness == Direction(V({0, 1})));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latsize/oracle.hpp"
#include "support/test_support.hpp"

using namespace latsize;
using namespace latsize::testing;

namespace {
OracleConfig cfg(long long M) {
  OracleConfig c;
  c.entry_bound = M;
  return c;
}
}  // namespace

TEST_CASE("oracle_ls_delta in dimension 2") {
  CHECK(oracle_ls_delta(standard_simplex(2), cfg(1)) == 1);
  CHECK(oracle_ls_delta(standard_simplex(2, 2), cfg(2)) == 2);
  CHECK(oracle_ls_delta(unit_cube(2), cfg(1)) == 2);
  // d = 1 family member T_5 = conv{(1,0),(0,1),(5,1)}: the minimum is 5,
  // one below k+3 = 6; this is why the closed forms require d >= 2.
  CHECK(oracle_ls_delta(family({5}), cfg(2)) == 5);
}

TEST_CASE("oracle_ls_cube in dimension 2") {
  CHECK(oracle_ls_cube(unit_cube(2), cfg(1)) == 1);
  CHECK(oracle_ls_cube(standard_simplex(2, 2), cfg(2)) == 2);
  CHECK(oracle_ls_cube(family({5}), cfg(2)) == 5);
}

TEST_CASE("oracle values for T_{1,3}") {
  CHECK(oracle_ls_delta(family({1, 3}), cfg(2)) == 3);
  CHECK(oracle_ls_cube(family({1, 3}), cfg(2)) == 2);
}

TEST_CASE("oracle monotonicity in the entry bound") {
  const LatticePolytope T = family({2, 2});
  CHECK(oracle_ls_delta(T, cfg(1)) >= oracle_ls_delta(T, cfg(2)));
  CHECK(oracle_ls_cube(T, cfg(1)) >= oracle_ls_cube(T, cfg(2)));
}

TEST_CASE("oracle_width") {
  CHECK(oracle_width(family({2, 6}), 2) == 1);
  CHECK(oracle_width(standard_simplex(2, 3), 3) == 3);
  CHECK(oracle_width(P({{0, 0}, {5, 0}}), 1) == 0);  // direction e_2
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(oracle_ls_delta(standard_simplex(4), cfg(1)), std::invalid_argument);
  OracleConfig instant = cfg(2);
  instant.time_budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(oracle_ls_delta(family({1, 3}), instant), BudgetError);
}

#include <doctest.h>

#include "fqirr/errors.hpp"
#include "fqirr/fixtures.hpp"

using namespace fqirr;

TEST_CASE("expression evaluation") {
  const FixtureEnv q4{2, 2, 1};
  CHECK(eval_expression("q^2-q+1", q4) == 13);
  CHECK(eval_expression("q^(3/2)", q4) == 8);
  CHECK(eval_expression("-(q-1)*PM", q4) == -3);
  CHECK(eval_expression("MP*q", q4) == -4);
  CHECK(eval_expression("PM*(q^3 + 2*q)", FixtureEnv{2, 2, -1}) == -72);
  CHECK(eval_expression("t7*q", FixtureEnv{2, 1, -1}) == 1);
  CHECK(eval_expression("tau2*q^2-q^5", FixtureEnv{2, 2, 1}) == -220 * 16 - 1024);
  CHECK_THROWS_AS(eval_expression("q^(1/2)", FixtureEnv{2, 3, -1}), CrosscheckMismatch);
  CHECK_THROWS_AS(eval_expression("q^", q4), std::invalid_argument);
  CHECK_THROWS_AS(eval_expression("(q+1", q4), std::invalid_argument);
  CHECK_THROWS_AS(eval_expression("w7", q4), std::invalid_argument);
}

TEST_CASE("every printed row parses") {
  for (int p : {2, 3}) {
    for (unsigned m = 1; m <= kDm1TableRows; ++m) {
      for (int r : {2, 4}) {
        const FixtureEnv env{p, r, 1};
        CHECK_NOTHROW(eval_expression(explicit3_row(p, m), env));
        CHECK_NOTHROW(eval_expression(g0_dm1_row(p, m), env));
        CHECK_NOTHROW(eval_expression(gc_dm1_row(p, m), env));
      }
    }
  }
  for (auto col : {Gc3Column::even_zero, Gc3Column::odd_zero, Gc3Column::odd_nonzero, Gc3Column::even_cube,
                   Gc3Column::even_noncube}) {
    const bool even = col == Gc3Column::even_zero || col == Gc3Column::even_cube || col == Gc3Column::even_noncube;
    for (unsigned m = 1; m <= kD3TableRows; ++m) {
      CHECK_NOTHROW(eval_expression(gc3_row(col, m), FixtureEnv{2, even ? 2 : 3, 1}));
    }
    CHECK_THROWS_AS(gc3_row(col, kD3TableRows + 1), std::out_of_range);
  }
}

#include <doctest.h>

#include "fqirr/dickson.hpp"
#include "fqirr/errors.hpp"
#include "fqirr/places.hpp"

using namespace fqirr;

TEST_CASE("direct place counts") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(n_direct(ExtContext(f2, 1), -1, Elem{}) == 4);
  CHECK(n_direct(ExtContext(f2, 3), -1, Elem{}) == 4);
  CHECK(n_direct(ExtContext(f2, 1), -1, f2.field().one()) == 2);
  CHECK(n_direct(ExtContext(f2, 5), -1, Elem{}) == 44);

  const auto f8 = FieldContext::make(2, 3);
  CHECK(n_direct(ExtContext(f8, 1), 3, Elem{}) == 65);
  CHECK(n_direct(ExtContext(f8, 1), 3, f8.field().one()) == 1);

  const auto f3 = FieldContext::make(3, 1);
  CHECK(n_direct(ExtContext(f3, 2), -1, Elem{}) == 24);
  CHECK_THROWS_AS(n_direct(ExtContext(f3, 2), 3, Elem{}), ScopeError);
  CHECK_THROWS_AS(n_direct(ExtContext(f8, 4), 3, Elem{}, 1000), BudgetExceeded);
}

TEST_CASE("prime-field formula") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(n_q_prime(f2, 1) == 4);
  CHECK(n_q_prime(f2, 3) == 4);
  CHECK(n_q_prime(f2, 5) == BigInt(33) + dickson(5, BigInt(1), BigInt(2)));
  CHECK(n_q_prime(FieldContext::make(3, 1), 2) == 24);
  CHECK_THROWS_AS(n_q_prime(FieldContext::make(2, 2), 1), ScopeError);
}

TEST_CASE("class-number formula") {
  const auto f4 = FieldContext::make(2, 2);
  CHECK(n_kd3(f4, 1) == 8);
  CHECK(n_explicit3(f4, 1) == 8);
  CHECK(kd3_trace_set(FieldContext::make(3, 2)) == std::vector<long>{-4, -1, 2, 5});
  CHECK(kd3_trace_set(f4) == std::vector<long>{-1, 3});
  CHECK_THROWS_AS(n_kd3(FieldContext::make(2, 1), 2), ScopeError);
}

TEST_CASE("trace transfer") {
  CHECK(nperm_transfer(BigInt(4), BigInt(2), 1) == 2);
  CHECK(nperm_transfer(BigInt(65), BigInt(8), 1) == 1);
  for (unsigned m = 1; m <= 5; ++m) {
    const BigInt flat = pow_ui(9, m) + 1;
    CHECK(nperm_transfer(flat, BigInt(9), m) == flat);
  }
  CHECK_THROWS_AS(nperm_transfer(BigInt(7), BigInt(3), 1), CrosscheckMismatch);
}

TEST_CASE("d = 3 closed forms against direct counts") {
  for (int r : {1, 2, 3}) {
    const auto ctx = FieldContext::make(2, r);
    for (int m = 1; m <= 4; ++m) {
      const ExtContext ext(ctx, m);
      const DirectPlaceCounter dc(ext, 3);
      const Elem alpha = ext.solve_trace_one();
      for (Elem c : ctx.elements()) {
        const Elem beta = ext.ambient().mul(alpha, ext.embed(c));
        CHECK(n_closed_d3(ctx, static_cast<unsigned>(m), trace_class(ctx, c)) == dc.count(beta));
      }
    }
  }
}

TEST_CASE("resolver") {
  const auto f4 = FieldContext::make(2, 2);
  const auto r1 = resolve(trace_query(f4, 5, 3, Elem{}));
  CHECK(r1.method == PlaceMethod::expd3);
  REQUIRE(r1.crosschecks.size() == 1);
  CHECK(r1.crosschecks[0].first == "direct");
  CHECK(r1.crosschecks[0].second == r1.value);

  const auto f9 = FieldContext::make(3, 2);
  CHECK(resolve(trace_query(f9, 7, -1, Elem{})).method == PlaceMethod::kd3);

  // nonzero trace goes through the transfer
  const auto r2 = resolve(trace_query(f9, 3, -1, f9.field().one()));
  CHECK(r2.method == PlaceMethod::nperm_transfer);
  CHECK(r2.crosschecks.at(0).first == "direct");

  ResolveOptions closed;
  closed.policy = MethodPolicy::closed;
  CHECK(resolve(trace_query(f4, 5, 3, Elem{}), closed).crosschecks.empty());

  ResolveOptions direct;
  direct.policy = MethodPolicy::direct;
  direct.direct_budget = 100;
  CHECK_THROWS_AS(resolve(trace_query(f4, 5, 3, Elem{}), direct), BudgetExceeded);
  CHECK_THROWS_AS(resolve(trace_query(FieldContext::make(3, 1), 2, 3, Elem{})), ScopeError);

  // an explicit beta gives the same count as its trace class
  const ExtContext e(f4, 3);
  const Elem beta = e.ambient().from_index(11);
  const auto r3 = resolve(place_query(e, -1, beta));
  CHECK(r3.value == resolve(trace_query(f4, 3, -1, e.relative_trace(beta))).value);
}

TEST_CASE("place counts stay near q^m + 1") {
  for (auto [p, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const auto ctx = FieldContext::make(p, r);
    for (unsigned m = 1; m <= 12; ++m) {
      const BigInt q = ctx.q_big();
      for (Elem c : {Elem{}, ctx.field().one()}) {
        const BigInt n = n_closed_dm1(ctx, m, trace_class(ctx, c));
        CHECK(n >= 0);
        BigInt dev = n - pow(q, m) - 1;
        if (dev < 0) dev = -dev;
        // |dev| <= 2 (q-1) q^{m/2+1}, squared to stay in integers
        CHECK(dev * dev <= 4 * (q - 1) * (q - 1) * pow(q, m + 2));
      }
    }
  }
}

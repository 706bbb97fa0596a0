#include <doctest.h>

#include "fqirr/context.hpp"
#include "fqirr/errors.hpp"
#include "fqirr/oracle.hpp"

using namespace fqirr;

TEST_CASE("field context construction") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(f2.modulus() == std::vector<int>{0, 1});
  CHECK(f2.q() == 2);

  const auto f4 = FieldContext::make(2, 2, std::vector<int>{1, 1, 1});
  CHECK(f4.gamma() == f4.field().generator_x());

  CHECK_THROWS_WITH_AS(FieldContext::make(2, 2, std::vector<int>{1, 0, 1}), "reducible modulus", std::invalid_argument);
  CHECK_THROWS_AS(FieldContext::make(5, 1), ScopeError);
  CHECK_THROWS_AS(FieldContext::make(2, 40), ScopeError);
}

TEST_CASE("default moduli are irreducible and smallest") {
  for (int p : {2, 3}) {
    for (int n = 1; n <= (p == 2 ? 12 : 8); ++n) {
      const auto& f = default_modulus(p, n);
      REQUIRE(static_cast<int>(f.size()) == n + 1);
      CHECK(is_irreducible_prime(p, f));
      // no smaller monic irreducible of the same degree
      std::vector<int> g(f.size(), 0);
      g.back() = 1;
      std::uint64_t count = 1;
      for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t t = idx;
        // a_{n-1} most significant
        for (int i = 0; i < n; ++i) {
          g[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(p));
          t /= static_cast<std::uint64_t>(p);
        }
        if (g == f) break;
        CHECK_FALSE(is_irreducible_prime(p, g));
      }
    }
  }
}

TEST_CASE("absolute trace on F_4") {
  const auto f4 = FieldContext::make(2, 2);
  const Field& F = f4.field();
  const Elem w = F.generator_x();
  CHECK(F.mul(w, w) == F.add(w, F.one()));
  CHECK(F.trace(F.zero()) == 0);
  CHECK(F.trace(w) == 1);
  CHECK(F.trace(F.one()) == 0);
}

TEST_CASE("trace form matches the Frobenius sum") {
  for (auto [p, n] : {std::pair{2, 7}, std::pair{3, 5}, std::pair{2, 16}, std::pair{3, 9}}) {
    const Field F = Field::with_default_modulus(p, n);
    const std::uint64_t step = F.order() / 500 + 1;
    for (std::uint64_t i = 0; i < F.order(); i += step) {
      const Elem a = F.from_index(i);
      CHECK(F.trace(a) == F.trace_by_definition(a));
    }
  }
}

TEST_CASE("relative trace") {
  const auto f4 = FieldContext::make(2, 2);
  const ExtContext level1(f4, 1);
  for (Elem z : f4.elements()) CHECK(level1.relative_trace(z) == z);

  const ExtContext e(f4, 2);
  const Field& F = e.ambient();
  CHECK(e.relative_trace(F.zero()) == f4.field().zero());
  const Elem g = e.generator();
  CHECK(e.embed(e.relative_trace(g)) == F.add(g, F.pow(g, 4)));
  CHECK(F.is_primitive(g));
}

TEST_CASE("embedding respects the base modulus") {
  for (auto [p, r, m] : {std::tuple{2, 2, 3}, std::tuple{2, 3, 2}, std::tuple{3, 2, 2}, std::tuple{2, 4, 2}}) {
    const auto ctx = FieldContext::make(p, r);
    const ExtContext e(ctx, m);
    const Field& F = e.ambient();
    Elem acc = F.zero(), pw = F.one();
    for (int c : ctx.modulus()) {
      acc = F.add(acc, F.scale(pw, c));
      pw = F.mul(pw, e.theta());
    }
    CHECK(F.is_zero(acc));
    for (Elem a : ctx.elements()) CHECK(e.unembed(e.embed(a)) == a);
  }
}

TEST_CASE("additive character") {
  const auto f4 = FieldContext::make(2, 2);
  const ExtContext e4(f4, 1);
  CHECK(e4.char_e(Elem{}) == CycInt::root_of_unity(2, 0));
  CHECK(e4.char_e(f4.field().generator_x()) == CycInt(2, -1));

  const auto f3 = FieldContext::make(3, 1);
  const ExtContext e3(f3, 1);
  CHECK(e3.char_e(f3.field().one()) == CycInt(3, 0, 1));
  CHECK(e3.char_e(Elem{}) == CycInt(3, 1));
}

TEST_CASE("cube classes") {
  const auto f4 = FieldContext::make(2, 2);
  CHECK(f4.is_cube(f4.field().one()));
  CHECK_FALSE(f4.is_cube(f4.field().generator_x()));
  const auto f16 = FieldContext::make(2, 4);
  CHECK(f16.is_cube(f16.field().pow(f16.gamma(), 3)));
  CHECK_FALSE(f16.is_cube(f16.gamma()));
  CHECK_THROWS_AS(FieldContext::make(2, 3).is_cube(Elem{1}), ScopeError);
}

TEST_CASE("solve_trace_one is the first element of trace one") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(ExtContext(f2, 1).solve_trace_one() == f2.field().one());

  const ExtContext e4(f2, 2);
  CHECK(e4.solve_trace_one() == e4.ambient().parse("0,1"));

  const auto f3 = FieldContext::make(3, 1);
  const ExtContext e9(f3, 2);
  const Field& F = e9.ambient();
  Elem first{};
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Elem z = F.from_index(i);
    if (F.add(z, F.pow(z, 3)) == F.one()) {
      first = z;
      break;
    }
  }
  CHECK(e9.solve_trace_one() == first);
}

TEST_CASE("inverse with the zero convention") {
  const Field F = Field::with_default_modulus(2, 2);
  const Elem w = F.generator_x();
  CHECK(F.inv_or_zero(F.zero()) == F.zero());
  CHECK(F.inv_or_zero(F.one()) == F.one());
  CHECK(F.inv_or_zero(w) == F.mul(w, w));
  CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);

  const Field G = Field::with_default_modulus(3, 6);
  for (std::uint64_t i = 1; i < G.order(); i += 37) {
    const Elem a = G.from_index(i);
    CHECK(G.mul(a, G.inv(a)) == G.one());
  }
}

TEST_CASE("text format round trip") {
  const Field F = Field::with_default_modulus(3, 4);
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Elem a = F.from_index(i);
    CHECK(F.parse(F.format(a)) == a);
    CHECK(F.index(a) == i);
  }
  CHECK_THROWS_AS(F.parse("0,3"), std::invalid_argument);
  CHECK_THROWS_AS(F.parse("1,1,1,1,1"), std::invalid_argument);
  CHECK(F.parse("2") == F.scale(F.one(), 2));
}

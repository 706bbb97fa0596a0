#include <doctest.h>

#include "fqirr/dickson.hpp"
#include "fqirr/errors.hpp"
#include "fqirr/expsum.hpp"

using namespace fqirr;

namespace {

// S by the definition, one field element at a time.
BigInt naive_sum(const ExtContext& ext, int d, Elem u, Elem v) {
  const Field& F = ext.ambient();
  const Elem U = ext.embed(u), V = ext.embed(v);
  CycInt acc(ext.base().p());
  for (std::uint64_t i = d == -1 ? 1 : 0; i < ext.size(); ++i) {
    const Elem z = F.from_index(i);
    const Elem zd = d == 3 ? F.pow(z, 3) : F.inv(z);
    acc += ext.char_e(F.add(F.mul(U, z), F.mul(V, zd)));
  }
  return acc.real_value();
}

}  // namespace

TEST_CASE("exponential sums at level one") {
  const auto f2 = FieldContext::make(2, 1);
  const ExtContext e(f2, 1);
  const Elem one = f2.field().one();
  CHECK(s_sum(e, -1, one, one) == 1);
  CHECK(s_sum(e, 3, one, one) == 2);
  for (int r : {1, 2, 3, 4}) {
    const auto ctx = FieldContext::make(2, r);
    CHECK(s_sum(ExtContext(ctx, 1), 3, Elem{}, Elem{}) == ctx.q_big());
  }
  CHECK_THROWS_AS(s_sum(ExtContext(FieldContext::make(3, 1), 1), 3, Elem{}, Elem{}), ScopeError);
  CHECK_THROWS_AS(check_sum_exponent(2, 5), ScopeError);
}

TEST_CASE("walked sums equal the definition") {
  for (auto [p, r, m] : {std::tuple{2, 1, 5}, std::tuple{2, 2, 3}, std::tuple{3, 1, 4}, std::tuple{3, 2, 2}, std::tuple{2, 3, 2}}) {
    const auto ctx = FieldContext::make(p, r);
    const ExtContext ext(ctx, m);
    for (int d : {-1, 3}) {
      if (d == 3 && p != 2) continue;
      const auto table = all_sums(ext, d);
      for (Elem u : ctx.elements()) {
        for (Elem v : ctx.elements()) {
          const BigInt want = naive_sum(ext, d, u, v);
          CHECK(s_sum(ext, d, u, v) == want);
          CHECK(table.at(ctx.field().index(u), ctx.field().index(v)) == want);
        }
      }
    }
  }
}

TEST_CASE("Dickson lift") {
  const auto f2 = FieldContext::make(2, 1);
  const Elem one = f2.field().one();
  CHECK(dickson_lift(ExtContext(f2, 1), -1, one, one) == s_sum(ExtContext(f2, 1), -1, one, one));
  CHECK(lift_value(BigInt(7), 1, BigInt(16)) == 7);
  const ExtContext e8(f2, 3);
  CHECK(dickson_lift(e8, -1, one, one) == -5);
  CHECK(s_sum(e8, -1, one, one) == -5);

  const auto f4 = FieldContext::make(2, 2);
  const ExtContext e16(f4, 2);
  const Elem u = f4.field().one();
  const BigInt s1 = s_sum(ExtContext(f4, 1), 3, u, u);
  CHECK(dickson_lift(e16, 3, u, u) == -(s1 * s1 - 8));
  CHECK(dickson_lift(e16, 3, u, u) == s_sum(e16, 3, u, u));

  // v = 0 with u != 0 gives S = 0 at every level, which no lift of S_1 = 0 matches
  CHECK(s_sum(e16, 3, u, Elem{}) == 0);
  CHECK(lift_value(BigInt(0), 2, BigInt(4)) == 8);
  CHECK_FALSE(lift_applies(3, false, true));
  CHECK(lift_applies(3, true, false));
  CHECK_FALSE(lift_applies(-1, true, false));
  CHECK_THROWS_AS(dickson_lift(e16, 3, u, Elem{}), std::invalid_argument);
  CHECK_THROWS_AS(dickson_lift(e16, -1, Elem{}, u), std::invalid_argument);
}

TEST_CASE("value distribution histograms") {
  for (int r = 2; r <= 6; ++r) {
    const auto ctx = FieldContext::make(2, r);
    const auto h = s3_value_distribution(ctx);
    BigInt total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      total += h[i].multiplicity;
      if (i) CHECK(h[i - 1].value < h[i].value);
    }
    CHECK(total == ctx.q_big() * ctx.q_big());
    CHECK(h == merge_rows(expected_distribution_rows(r)));
  }
  // q = 4: the rows "q" and "2 sqrt q" both have value 4 and merge
  const auto rows = expected_distribution_rows(2);
  int fours = 0;
  for (const auto& row : rows) fours += row.value == 4 ? 1 : 0;
  CHECK(fours == 2);
  CHECK_THROWS_AS(s3_value_distribution(FieldContext::make(3, 2)), ScopeError);
}

TEST_CASE("Carlitz classification") {
  const auto f16 = FieldContext::make(2, 4);
  for (Elem v : f16.elements()) {
    if (v.bits == 0) continue;
    const auto rec = carlitz_classify(f16, v);
    CHECK(rec.cube == f16.is_cube(v));
    CHECK(rec.holds());
  }
  // at q = 4 the cube class misses -2 sqrt q: the four sums add up to q
  const auto f4 = FieldContext::make(2, 2);
  const auto rec = carlitz_classify(f4, f4.field().one());
  CHECK(rec.contained());
  CHECK(rec.values == std::vector<BigInt>{0, 4});
  CHECK_THROWS_AS(carlitz_classify(FieldContext::make(2, 3), Elem{1}), ScopeError);
}

TEST_CASE("sum over u keeps the trace-zero elements") {
  // sum_u S_3(u, v) = q * sum_{tr z = 0} e(v z^3)
  for (auto [r, m] : {std::pair{2, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto ctx = FieldContext::make(2, r);
    const ExtContext ext(ctx, m);
    const Field& F = ext.ambient();
    const auto t = all_sums(ext, 3);
    for (Elem v : ctx.elements()) {
      CycInt rhs(2);
      for (std::uint64_t i = 0; i < ext.size(); ++i) {
        const Elem z = F.from_index(i);
        if (ext.relative_trace(z).bits == 0) rhs += ext.char_e(F.mul(ext.embed(v), F.pow(z, 3)));
      }
      BigInt lhs = 0;
      for (std::uint64_t iu = 0; iu < ctx.q(); ++iu) lhs += t.at(iu, ctx.field().index(v));
      CHECK(lhs == ctx.q_big() * rhs.real_value());
    }
  }
}

#include <doctest.h>

#include "fqirr/errors.hpp"
#include "fqirr/irrcount.hpp"
#include "fqirr/oracle.hpp"

using namespace fqirr;

namespace {

BigInt count(const FieldContext& ctx, Case kind, Elem c, unsigned m, CountMethod method = CountMethod::automatic) {
  CountOptions co;
  co.method = method;
  return count_polynomials(ctx, Prescription{kind, c, m}, co).count;
}

}  // namespace

TEST_CASE("Moebius and irreducible totals") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(irr_total(BigInt(2), 1) == 2);
  CHECK(irr_total(BigInt(2), 3) == 2);
  CHECK(irr_total(BigInt(3), 2) == 3);
  CHECK(irr_total(BigInt(4), 6) == (pow_ui(4, 6) - pow_ui(4, 3) - pow_ui(4, 2) + 4) / 6);
}

TEST_CASE("element counts H and G") {
  const auto f2 = FieldContext::make(2, 1);
  const Elem one = f2.field().one();
  CHECK(h_count(f2, 1, Elem{}, -1) == 1);
  CHECK(g_count(f2, 1, Elem{}, -1) == 1);
  CHECK(g_count(f2, 3, one, 3) == 3);
  CHECK(h_count(f2, 3, one, 3) == count_elements_by_traces(ExtContext(f2, 3), one, 3, false));
  CHECK(g_count(FieldContext::make(3, 1), 5, Elem{}, -1) == 20);
}

TEST_CASE("polynomial counts, small anchors") {
  const auto f2 = FieldContext::make(2, 1);
  const Elem one = f2.field().one();
  CHECK(count(f2, Case::i, one, 3) == 1);
  CHECK(count(f2, Case::ii, Elem{}, 5) == 2);
  CHECK(count(FieldContext::make(3, 1), Case::ii, Elem{}, 5) == 4);
  // m = 2: a_1 and a_{m-1} are the same coefficient, so a_1 = 0 and a_1 = 1
  // cannot both hold and x^2 + x + 1 is not counted
  CHECK(count(f2, Case::ii, one, 2, CountMethod::brute) == 0);
  CHECK(count(f2, Case::ii, one, 2, CountMethod::moebius) == 0);
  CHECK(count(f2, Case::ii, Elem{}, 2, CountMethod::brute) == 0);
}

TEST_CASE("automatic counts carry cross-checks") {
  const auto f8 = FieldContext::make(2, 3);
  CountOptions co;
  const auto rec = count_polynomials(f8, Prescription{Case::i, f8.gamma(), 12}, co);
  CHECK(rec.G == pow_ui(8, 10) - 64);
  CHECK(rec.count == rec.G / 12);
  CHECK(rec.method == "moebius");
  REQUIRE_FALSE(rec.crosschecks.empty());
  CHECK(rec.crosschecks[0].first == "closed");

  const auto f4 = FieldContext::make(2, 2);
  const auto small = count_polynomials(f4, Prescription{Case::ii_variant, f4.gamma(), 6}, co);
  bool brute = false;
  for (const auto& [label, v] : small.crosschecks) brute = brute || (label == "brute" && v == small.count);
  CHECK(brute);
}

TEST_CASE("scope rules") {
  const auto f3 = FieldContext::make(3, 1);
  CHECK_THROWS_WITH_AS(count(f3, Case::i, Elem{}, 3), "case (i) requires characteristic 2", ScopeError);
  CHECK_THROWS_WITH_AS(count(FieldContext::make(2, 1), Case::i, Elem{}, 2), "case (i) requires m >= 3", ScopeError);
  CHECK_THROWS_WITH_AS(count(f3, Case::ii, Elem{}, 1), "case (ii) requires m >= 2", ScopeError);
  CHECK(case_from_name("ii-variant") == Case::ii_variant);
  CHECK_THROWS_AS(case_from_name("iii"), std::invalid_argument);
  CHECK(count_method_from_name("moebius") == CountMethod::moebius);
}

TEST_CASE("closed method reads the printed tables") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(count(f2, Case::ii, Elem{}, 5, CountMethod::closed) == 2);
  CHECK(g_fixture(f2, 5, Elem{}, -1) == BigInt(10));
  CHECK_FALSE(g_fixture(f2, 11, Elem{}, -1).has_value());
  CHECK_THROWS_AS(count(f2, Case::ii, Elem{}, 11, CountMethod::closed), ScopeError);
}

TEST_CASE("degree divides G") {
  PipelineOptions po;
  po.policy = MethodPolicy::closed;
  for (auto [p, r] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 2}}) {
    const auto ctx = FieldContext::make(p, r);
    for (unsigned m = 1; m <= 20; ++m) {
      for (Elem c : ctx.elements()) {
        CHECK(g_count(ctx, m, c, -1, po) % m == 0);
        if (p == 2) CHECK(g_count(ctx, m, c, 3, po) % m == 0);
      }
    }
  }
}

TEST_CASE("G_{c,3}(4s) identity") {
  for (int r : {1, 3, 5}) {
    const auto ctx = FieldContext::make(2, r);
    for (unsigned s : {3U, 5U, 7U, 11U}) CHECK(four_s_identity_check(ctx, s));
  }
  CHECK_THROWS_AS(four_s_identity_check(FieldContext::make(2, 1), 9), std::invalid_argument);
  CHECK_THROWS_AS(four_s_identity_check(FieldContext::make(2, 2), 3), ScopeError);
}

#include <doctest.h>

#include "fqirr/errors.hpp"
#include "fqirr/irrcount.hpp"
#include "fqirr/oracle.hpp"

using namespace fqirr;

TEST_CASE("irreducibility over F_2") {
  CHECK(is_irreducible_prime(2, std::vector<int>{1, 1, 1}));
  CHECK_FALSE(is_irreducible_prime(2, std::vector<int>{1, 0, 1}));
  CHECK(is_irreducible_prime(2, std::vector<int>{1, 1, 0, 1}));
  CHECK_FALSE(is_irreducible_prime(3, std::vector<int>{2, 0, 1}));  // x^2 - 1
  CHECK(is_irreducible_prime(3, std::vector<int>{1, 0, 1}));
}

TEST_CASE("distinct-degree test agrees with trial division") {
  for (auto [p, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto ctx = FieldContext::make(p, r);
    const SmallField k(ctx);
    for (unsigned m = 1; ; ++m) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < m; ++i) total *= ctx.q();
      if (total > (1U << 12)) break;
      SmallPoly f(m + 1, 0);
      f[m] = 1;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (unsigned i = 0; i < m; ++i) {
          f[i] = static_cast<std::uint32_t>(t % ctx.q());
          t /= ctx.q();
        }
        CHECK(is_irreducible(f, k) == is_irreducible_trial_division(f, k));
      }
    }
  }
}

TEST_CASE("enumeration counts") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(enumerate_and_count(f2, 5, [](std::span<const Elem> a) { return a[4].bits == 0 && a[1].bits == 0; }) == 2);
  CHECK(enumerate_and_count(f2, 3, [](std::span<const Elem> a) { return a[2].bits == 0 && a[0].bits != 0; }) == 1);
  const auto f3 = FieldContext::make(3, 1);
  CHECK(enumerate_and_count(f3, 2, [](std::span<const Elem>) { return true; }) == 3);
  CHECK_THROWS_AS(enumerate_and_count(f2, 10, [](std::span<const Elem>) { return true; }, 512), BudgetExceeded);
}

TEST_CASE("enumeration totals equal the necklace count") {
  for (auto [p, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 4}}) {
    const auto ctx = FieldContext::make(p, r);
    for (unsigned m = 1; ; ++m) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < m; ++i) total *= ctx.q();
      if (total > (1U << 14)) break;
      CHECK(enumerate_and_count(ctx, m, [](std::span<const Elem>) { return true; }) == irr_total(ctx.q_big(), m));
    }
  }
}

TEST_CASE("element census by traces") {
  const auto f2 = FieldContext::make(2, 1);
  CHECK(count_elements_by_traces(ExtContext(f2, 1), Elem{}, -1, false) == 1);
  CHECK(count_elements_by_traces(ExtContext(f2, 3), Elem{}, -1, true) == 0);
  for (auto [p, r, m] : {std::tuple{2, 2, 3}, std::tuple{3, 1, 5}, std::tuple{3, 2, 2}}) {
    const auto ctx = FieldContext::make(p, r);
    const ExtContext ext(ctx, m);
    BigInt sum = 0;
    for (const auto& n : trace_census(ext, -1, false)) sum += n;
    CHECK(sum == pow(ctx.q_big(), static_cast<unsigned long>(m - 1)));
  }
}

#include <doctest.h>

#include <cstdlib>

#include "fqirr/bigint.hpp"
#include "fqirr/classnum.hpp"

using namespace fqirr;

namespace {

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = 0;
  while (r * r < n) ++r;
  return r * r == n;
}

}  // namespace

TEST_CASE("class numbers") {
  CHECK(class_number_h(-3) == 1);
  CHECK(class_number_h(-4) == 1);
  CHECK(class_number_h(-15) == 2);
  CHECK(class_number_h(-23) == 3);
  CHECK(class_number_h(-47) == 5);
  CHECK(class_number_h(-163) == 1);
  CHECK(class_number_h(-12) == 1);
  CHECK_THROWS_AS(class_number_h(-5), std::invalid_argument);
  CHECK_THROWS_AS(class_number_h(8), std::invalid_argument);
}

TEST_CASE("class numbers are positive") {
  for (std::int64_t D = -3; D >= -2000; --D) {
    const auto m = ((D % 4) + 4) % 4;
    if (m == 0 || m == 1) CHECK(class_number_h(D) >= 1);
  }
}

TEST_CASE("Kronecker class numbers, unweighted") {
  CHECK(kronecker_H(-7) == 1);
  CHECK(kronecker_H(-15) == 2);
  CHECK(kronecker_H(-12) == 2);
  CHECK(kronecker_H(-3) == 1);
  CHECK(kronecker_H(-4) == 1);
  CHECK(kronecker_H(-16) == 2);  // h(-16) + h(-4)
  CHECK(kronecker_H(-27) == 2);  // h(-27) + h(-3)
  CHECK(kronecker_H(-5) == 0);
  CHECK_THROWS_AS(kronecker_H(0), std::invalid_argument);
}


TEST_CASE("Hurwitz relation for prime q") {
  // sum_{t^2 < 4q} H_w(t^2 - 4q) = 2q with the weighted H_w, which drops
  // 1/2 at D = -4f^2 and 2/3 at D = -3f^2 from the unweighted count.
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    BigRat sum = 0;
    for (std::int64_t t = -q; t <= q; ++t) {
      const std::int64_t D = t * t - 4 * q;
      if (D >= 0) continue;
      BigRat h = kronecker_H(D);
      if (-D % 4 == 0 && is_square(-D / 4)) h -= BigRat(1, 2);
      if (-D % 3 == 0 && is_square(-D / 3)) h -= BigRat(2, 3);
      sum += h;
    }
    CHECK(sum == 2 * q);
  }
}

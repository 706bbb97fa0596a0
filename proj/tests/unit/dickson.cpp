#include <doctest.h>

#include <gmpxx.h>

#include "fqirr/dickson.hpp"

using namespace fqirr;

namespace {

BigRat rat(long a, long b = 1) {
  BigRat x(a, b);
  x.canonicalize();
  return x;
}

BigInt binom(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

TEST_CASE("Dickson recurrence") {
  CHECK(dickson(0, rat(7), rat(3)) == 2);
  CHECK(dickson(1, rat(7), rat(3)) == 7);
  CHECK(dickson(2, BigInt(5), BigInt(3)) == 19);
  CHECK(dickson(3, BigInt(1), BigInt(2)) == -5);
}

TEST_CASE("Dickson functional equation") {
  CHECK(dickson_functional_check(1, rat(5, 3), rat(-2)));
  CHECK(dickson_functional_check(5, rat(2), rat(3)));
  CHECK(dickson_functional_check(10, rat(1, 2), rat(7)));
  CHECK_THROWS_AS(dickson_functional_check(3, rat(0), rat(1)), std::invalid_argument);
}

TEST_CASE("Dickson recurrence equals the explicit sum") {
  // D_m = sum_j m/(m-j) C(m-j, j) (-omega)^j t^{m-2j}
  for (auto [t, w] : {std::pair{rat(3, 2), rat(-5, 7)}, std::pair{rat(-4), rat(9)}, std::pair{rat(1, 3), rat(2, 5)}}) {
    for (unsigned m = 1; m <= 20; ++m) {
      BigRat sum = 0;
      for (unsigned j = 0; 2 * j <= m; ++j) {
        BigRat term(BigInt(m) * binom(m - j, j), BigInt(m - j));
        term.canonicalize();
        sum += term * pow(BigRat(-w), j) * pow(t, m - 2 * j);
      }
      CHECK(dickson(m, t, w) == sum);
    }
  }
}

TEST_CASE("Dickson special values at 2 sqrt q, 0, sqrt q") {
  for (unsigned long s : {2UL, 4UL, 8UL}) {
    const BigInt q(s * s);
    const BigInt root(s);
    for (unsigned m = 0; m <= 24; ++m) {
      CHECK(dickson(m, BigInt(2 * root), q) == 2 * pow(root, m));
      CHECK(dickson(m, BigInt(-2 * root), q) == 2 * pow(BigInt(-root), m));
      CHECK(dickson(m, BigInt(0), q) == (m % 2 ? BigInt(0) : BigInt(2 * pow(BigInt(-q), m / 2))));
      static const int plus[6] = {2, 1, -1, -2, -1, 1};
      static const int minus[6] = {2, -1, -1, 2, -1, -1};
      CHECK(dickson(m, root, q) == plus[m % 6] * pow(root, m));
      CHECK(dickson(m, BigInt(-root), q) == minus[m % 6] * pow(root, m));
    }
  }
}

TEST_CASE("power sums of the tabulated constants") {
  CHECK(power_sum(Constant::t7, 0) == 2);
  CHECK(power_sum(Constant::t7, 1) == rat(1, 2));
  CHECK(power_sum(Constant::tau2, 2) == -220);
  CHECK(power_sum(Constant::t11, 0) == 4);
  for (unsigned r = 0; r <= 30; ++r) {
    CHECK(power_sum(Constant::tau2, r).get_den() == 1);
    CHECK(power_sum(Constant::tau3, r).get_den() == 1);
  }
  CHECK(constant_from_name("u11") == Constant::u11);
  CHECK(constant_name(Constant::tau3) == "tau3");
  CHECK_THROWS_AS(constant_from_name("t13"), std::invalid_argument);
}

TEST_CASE("quadratic constants come from unit-modulus roots") {
  // |w| = 1: a_r = D_r(a_1, 1). tau2 and tau3 have |w|^2 = 2^7, 3^7.
  for (Constant c : {Constant::t7, Constant::t9, Constant::u9, Constant::u11}) {
    const BigRat a1 = power_sum(c, 1);
    for (unsigned r = 0; r <= 15; ++r) CHECK(power_sum(c, r) == dickson(r, a1, rat(1)));
  }
  for (unsigned r = 0; r <= 15; ++r) {
    CHECK(power_sum(Constant::tau2, r) == dickson(r, rat(-24), rat(2048)) / pow(rat(4), r));
  }
}

TEST_CASE("t11 quartic against the nested radicals") {
  // w = (-3 +- sqrt505 + sqrt(-510 -+ 6 sqrt505)) / 32, evaluated to 256 bits.
  const mp_bitcnt_t prec = 256;
  const mpf_class s505 = sqrt(mpf_class(505, prec));
  mpf_class total[9];
  for (auto& x : total) x = mpf_class(0, prec);
  for (int sg : {1, -1}) {
    const mpf_class re = (mpf_class(-3, prec) + sg * s505) / 32;
    const mpf_class im = sqrt(mpf_class(510, prec) + sg * 6 * s505) / 32;
    mpf_class a(1, prec), b(0, prec);
    for (int r = 0; r <= 8; ++r) {
      total[r] += 2 * a;  // w^r + conj(w)^r
      const mpf_class na = a * re - b * im;
      b = a * im + b * re;
      a = na;
    }
  }
  for (unsigned r = 0; r <= 8; ++r) {
    const BigRat exact = power_sum(Constant::t11, r);
    const mpf_class diff = abs(total[r] - mpf_class(exact, prec));
    CHECK(diff < mpf_class("1e-30", prec));
  }
}

TEST_CASE("Ramanujan tau") {
  CHECK(ramanujan_tau(1) == 1);
  CHECK(ramanujan_tau(2) == -24);
  CHECK(ramanujan_tau(3) == 252);
  CHECK(ramanujan_tau(4) == -1472);
  CHECK(ramanujan_tau(5) == 4830);
  CHECK(ramanujan_tau(12) == -370944);
  // multiplicativity and the Hecke relation
  CHECK(ramanujan_tau(6) == ramanujan_tau(2) * ramanujan_tau(3));
  CHECK(ramanujan_tau(35) == ramanujan_tau(5) * ramanujan_tau(7));
  CHECK(ramanujan_tau(8) == ramanujan_tau(2) * ramanujan_tau(4) - pow_ui(2, 11) * ramanujan_tau(2));
  CHECK_THROWS_AS(ramanujan_tau(0), std::out_of_range);
  CHECK_THROWS_AS(ramanujan_tau(20, 10), std::out_of_range);
}

TEST_CASE("tau identity") {
  CHECK(BigRat(ramanujan_tau(4) - pow_ui(2, 11) * ramanujan_tau(1)) == 16 * power_sum(Constant::tau2, 2));
  CHECK(BigRat(ramanujan_tau(9) - pow_ui(3, 11) * ramanujan_tau(1)) == 81 * power_sum(Constant::tau3, 2));
  CHECK(tau_identity_check(2, 3));
  CHECK(tau_identity_check(2, 13));
  CHECK(tau_identity_check(3, 8));
  CHECK_THROWS_AS(tau_identity_check(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(tau_identity_check(2, 14), std::out_of_range);
}

#include "fqirr/dickson.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace fqirr {

namespace {

template <typename T>
T dickson_impl(unsigned m, const T& t, const T& omega) {
  T prev = 2;  // D_0
  if (m == 0) return prev;
  T cur = t;  // D_1
  for (unsigned i = 2; i <= m; ++i) {
    T next = t * cur - omega * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

BigRat dickson(unsigned m, const BigRat& t, const BigRat& omega) { return dickson_impl<BigRat>(m, t, omega); }

BigInt dickson(unsigned m, const BigInt& t, const BigInt& omega) { return dickson_impl<BigInt>(m, t, omega); }

bool dickson_functional_check(unsigned m, const BigRat& y, const BigRat& omega) {
  if (y == 0) throw std::invalid_argument("dickson_functional_check: y must be nonzero");
  const BigRat lhs = dickson(m, BigRat(y + omega / y), omega);
  const BigRat rhs = pow(y, m) + pow(omega, m) / pow(y, m);
  return lhs == rhs;
}

PowerSumSeq::PowerSumSeq(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSumSeq needs a polynomial of degree >= 1");
}

PowerSumSeq PowerSumSeq::quadratic(const BigRat& trace, const BigRat& norm) {
  return PowerSumSeq({norm, BigRat(-trace)});
}

BigRat PowerSumSeq::operator()(unsigned r) const {
  const std::size_t k = coeffs_.size();
  std::vector<BigRat> a(r + 1);
  a[0] = static_cast<long>(k);
  for (unsigned n = 1; n <= r; ++n) {
    // Newton: a_n = -(sum_{i=1}^{min(n-1,k)} c_{k-i} a_{n-i}) - n c_{k-n} [n <= k]
    BigRat acc = 0;
    for (std::size_t i = 1; i <= k && i < n; ++i) acc += coeffs_[k - i] * a[n - i];
    if (n <= k) acc += BigRat(static_cast<long>(n)) * coeffs_[k - n];
    a[n] = -acc;
  }
  return a[r];
}

namespace {

struct ConstantDef {
  Constant id;
  std::string_view name;
};

constexpr std::array<ConstantDef, 7> kConstants{{
    {Constant::t7, "t7"},
    {Constant::t9, "t9"},
    {Constant::t11, "t11"},
    {Constant::u9, "u9"},
    {Constant::u11, "u11"},
    {Constant::tau2, "tau2"},
    {Constant::tau3, "tau3"},
}};

BigRat rat(long num, long den = 1) {
  BigRat x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace

const PowerSumSeq& constant_sequence(Constant c) {
  // w = (1+sqrt(-15))/4, (-5+sqrt(-39))/8, (5+2sqrt(-14))/9, (-1+4sqrt(-5))/9,
  // -3+sqrt(-119), 14+sqrt(-1991): minimal polynomials x^2 - (w + conj w) x + |w|^2.
  static const PowerSumSeq t7 = PowerSumSeq::quadratic(rat(1, 2), rat(1));
  static const PowerSumSeq t9 = PowerSumSeq::quadratic(rat(-5, 4), rat(1));
  static const PowerSumSeq u9 = PowerSumSeq::quadratic(rat(10, 9), rat(1));
  static const PowerSumSeq u11 = PowerSumSeq::quadratic(rat(-2, 9), rat(1));
  static const PowerSumSeq tau2 = PowerSumSeq::quadratic(rat(-6), rat(128));
  static const PowerSumSeq tau3 = PowerSumSeq::quadratic(rat(28), rat(2187));
  // (x^2 - s+ x + 1)(x^2 - s- x + 1), s+ + s- = -3/8, s+ s- = -31/16.
  static const PowerSumSeq t11({rat(1), rat(3, 8), rat(1, 16), rat(3, 8)});
  switch (c) {
    case Constant::t7: return t7;
    case Constant::t9: return t9;
    case Constant::t11: return t11;
    case Constant::u9: return u9;
    case Constant::u11: return u11;
    case Constant::tau2: return tau2;
    case Constant::tau3: return tau3;
  }
  throw std::invalid_argument("unknown constant");
}

BigRat power_sum(Constant c, unsigned r) { return constant_sequence(c)(r); }

std::string_view constant_name(Constant c) {
  for (const auto& d : kConstants) {
    if (d.id == c) return d.name;
  }
  throw std::invalid_argument("unknown constant");
}

Constant constant_from_name(std::string_view name) {
  for (const auto& d : kConstants) {
    if (d.name == name) return d.id;
  }
  throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

std::vector<BigInt> ramanujan_tau_table(unsigned n) {
  // Euler: prod (1 - x^k) = sum_j (-1)^j x^{j(3j-1)/2}, j in Z.
  std::vector<std::pair<unsigned, int>> euler;  // (exponent, sign), exponent >= 1
  for (long j = 1;; ++j) {
    const long e1 = j * (3 * j - 1) / 2;
    const long e2 = j * (3 * j + 1) / 2;
    if (e1 > static_cast<long>(n)) break;
    const int sign = (j % 2) ? -1 : 1;
    euler.emplace_back(static_cast<unsigned>(e1), sign);
    if (e2 <= static_cast<long>(n)) euler.emplace_back(static_cast<unsigned>(e2), sign);
  }
  // g = (prod (1 - x^k))^24 by  n g_n = sum_k (25 k - n) p_k g_{n-k}.
  std::vector<BigInt> g(n, 0);
  if (n == 0) return {BigInt(0)};
  g[0] = 1;
  for (unsigned i = 1; i < n; ++i) {
    BigInt acc = 0;
    for (const auto& [k, sign] : euler) {
      if (k > i) break;
      const long w = 25L * static_cast<long>(k) - static_cast<long>(i);
      if (w == 0) continue;
      if (sign > 0) {
        acc += w * g[i - k];
      } else {
        acc -= w * g[i - k];
      }
    }
    g[i] = exact_div(acc, BigInt(static_cast<unsigned long>(i)), "tau series");
  }
  std::vector<BigInt> tau(n + 1, 0);
  for (unsigned i = 1; i <= n; ++i) tau[i] = g[i - 1];
  return tau;
}

BigInt ramanujan_tau(unsigned n, unsigned bound) {
  if (n < 1 || n > bound) {
    throw std::out_of_range("tau(" + std::to_string(n) + ") outside 1.." + std::to_string(bound));
  }
  static const std::vector<BigInt> table = ramanujan_tau_table(kDefaultTauBound);
  if (n <= kDefaultTauBound) return table[n];
  return ramanujan_tau_table(n)[n];
}

bool tau_identity_check(int p, unsigned r, unsigned bound) {
  if (p != 2 && p != 3) throw std::invalid_argument("tau identity is stated for p = 2, 3");
  if (r < 1) throw std::invalid_argument("r must be positive");
  BigInt qb = pow_ui(static_cast<unsigned long>(p), r);
  if (qb > bound) throw std::out_of_range("q = " + qb.get_str() + " exceeds the tau bound");
  const auto q = static_cast<unsigned>(qb.get_ui());
  BigInt lhs = ramanujan_tau(q, bound);
  if (r >= 2) lhs -= pow_ui(static_cast<unsigned long>(p), 11) * ramanujan_tau(q / static_cast<unsigned>(p * p), bound);
  const BigRat rhs = BigRat(qb * qb) * power_sum(p == 2 ? Constant::tau2 : Constant::tau3, r);
  return BigRat(lhs) == rhs;
}

}  // namespace fqirr

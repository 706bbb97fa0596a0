#include "fqirr/classnum.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fqirr {

namespace {

bool valid_discriminant(std::int64_t D) {
  const std::int64_t r = ((D % 4) + 4) % 4;
  return D < 0 && (r == 0 || r == 1);
}

}  // namespace

std::int64_t class_number_h(std::int64_t D) {
  if (!valid_discriminant(D)) throw std::invalid_argument("invalid discriminant " + std::to_string(D));
  const std::int64_t n = -D;
  std::int64_t h = 0;
  // a <= sqrt(|D|/3)
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    const std::int64_t b0 = (n % 2 == 0) ? 0 : 1;  // b = D (mod 2)
    for (std::int64_t b = -a + ((a + b0) % 2 == 0 ? 0 : 1); b <= a; b += 2) {
      if ((b * b + n) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b + n) / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

std::int64_t kronecker_H(std::int64_t D) {
  if (D >= 0) throw std::invalid_argument("kronecker_H needs D < 0");
  std::int64_t total = 0;
  for (std::int64_t f = 1; f * f <= -D; ++f) {
    if (D % (f * f) != 0) continue;
    const std::int64_t d = D / (f * f);
    if (valid_discriminant(d)) total += class_number_h(d);
  }
  return total;
}

}  // namespace fqirr

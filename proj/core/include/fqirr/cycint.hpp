#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fqirr/bigint.hpp"

namespace fqirr {

// Exact element a + b*zeta of Z[zeta_p] for p in {2, 3}. For p = 2,
// zeta = -1 and b is always 0; for p = 3, zeta^2 = -1 - zeta.
class CycInt {
 public:
  explicit CycInt(int p = 2) : p_(p) {}
  CycInt(int p, BigInt a, BigInt b = 0);

  // zeta^k.
  static CycInt root_of_unity(int p, int k);
  // sum over t of counts[t] * zeta^t, t in [0, p).
  static CycInt from_counts(int p, const std::array<std::int64_t, 3>& counts);

  int characteristic() const { return p_; }
  const BigInt& re_part() const { return a_; }
  const BigInt& zeta_part() const { return b_; }
  bool is_real() const { return b_ == 0; }
  // The rational integer value; throws CrosscheckMismatch when not real.
  BigInt real_value() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  friend CycInt operator+(CycInt x, const CycInt& y) { return x += y; }
  friend CycInt operator-(CycInt x, const CycInt& y) { return x -= y; }
  friend CycInt operator*(CycInt x, const CycInt& y) { return x *= y; }
  friend bool operator==(const CycInt& x, const CycInt& y) {
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  int p_;
  BigInt a_ = 0;
  BigInt b_ = 0;
};

}  // namespace fqirr

#include "fqirr/cycint.hpp"

#include <stdexcept>

#include "fqirr/errors.hpp"

namespace fqirr {

CycInt::CycInt(int p, BigInt a, BigInt b) : p_(p), a_(std::move(a)), b_(std::move(b)) {
  if (p != 2 && p != 3) throw ScopeError("CycInt supports p = 2, 3 only");
  if (p == 2 && b_ != 0) throw std::invalid_argument("Z[zeta_2] = Z has no zeta component");
}

CycInt CycInt::root_of_unity(int p, int k) {
  k %= p;
  if (k < 0) k += p;
  if (p == 2) return CycInt(2, k == 0 ? 1 : -1);
  if (k == 0) return CycInt(3, 1, 0);
  if (k == 1) return CycInt(3, 0, 1);
  return CycInt(3, -1, -1);
}

CycInt CycInt::from_counts(int p, const std::array<std::int64_t, 3>& counts) {
  if (p == 2) return CycInt(2, BigInt(static_cast<long>(counts[0] - counts[1])));
  // n0 + n1 z + n2 z^2 = (n0 - n2) + (n1 - n2) z
  return CycInt(3, BigInt(static_cast<long>(counts[0] - counts[2])),
                BigInt(static_cast<long>(counts[1] - counts[2])));
}

BigInt CycInt::real_value() const {
  if (!is_real()) throw CrosscheckMismatch("character sum " + str() + " is not a rational integer");
  return a_;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (o.p_ != p_) throw std::invalid_argument("CycInt characteristic mismatch");
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (o.p_ != p_) throw std::invalid_argument("CycInt characteristic mismatch");
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  if (o.p_ != p_) throw std::invalid_argument("CycInt characteristic mismatch");
  // (a + bz)(c + dz) = (ac - bd) + (ad + bc - bd) z
  const BigInt bd = b_ * o.b_;
  BigInt re = a_ * o.a_ - bd;
  BigInt ze = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(re);
  b_ = std::move(ze);
  return *this;
}

std::string CycInt::str() const {
  if (p_ == 2 || b_ == 0) return a_.get_str();
  return "(" + a_.get_str() + (b_ < 0 ? " - " : " + ") + BigInt(abs(b_)).get_str() + "*zeta3)";
}

}  // namespace fqirr

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fqirr {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt pow_ui(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

BigRat pow(const BigRat& base, unsigned long exp);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRat& x);

// a / b, throwing CrosscheckMismatch with `what` if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what);

// Integer value of a rational known to be integral.
BigInt to_integer(const BigRat& x, std::string_view what);

// Exact square root; throws CrosscheckMismatch if x is not a perfect square.
BigInt exact_sqrt(const BigInt& x, std::string_view what);

inline int sign_pow(unsigned long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace fqirr

#include "fqirr/bigint.hpp"

#include "fqirr/errors.hpp"

namespace fqirr {

BigRat pow(const BigRat& base, unsigned long exp) {
  BigRat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), base.get_num_mpz_t(), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

std::string to_string(const BigRat& x) { return x.get_str(); }

BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what) {
  if (b == 0) throw CrosscheckMismatch(std::string(what) + ": division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw CrosscheckMismatch(std::string(what) + ": " + a.get_str() + " is not divisible by " +
                             b.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt to_integer(const BigRat& x, std::string_view what) {
  if (x.get_den() != 1) {
    throw CrosscheckMismatch(std::string(what) + ": " + x.get_str() + " is not an integer");
  }
  return x.get_num();
}

BigInt exact_sqrt(const BigInt& x, std::string_view what) {
  if (x < 0 || !mpz_perfect_square_p(x.get_mpz_t())) {
    throw CrosscheckMismatch(std::string(what) + ": " + x.get_str() + " is not a perfect square");
  }
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace fqirr

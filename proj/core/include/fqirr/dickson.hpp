#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fqirr/bigint.hpp"

namespace fqirr {

// Dickson polynomial of the first kind, D_0 = 2, D_1 = t,
// D_m = t D_{m-1} - omega D_{m-2}.
BigRat dickson(unsigned m, const BigRat& t, const BigRat& omega);
BigInt dickson(unsigned m, const BigInt& t, const BigInt& omega);

// D_m(y + omega/y, omega) == y^m + omega^m / y^m. Throws on y = 0.
bool dickson_functional_check(unsigned m, const BigRat& y, const BigRat& omega);

// Power sums a_r = sum of rho^r over the roots rho of a monic polynomial
// with rational coefficients, via Newton's identities and the linear
// recurrence given by the polynomial.
class PowerSumSeq {
 public:
  // coeffs = {c_0, ..., c_{k-1}} for x^k + c_{k-1} x^{k-1} + ... + c_0.
  explicit PowerSumSeq(std::vector<BigRat> coeffs);
  // x^2 - trace x + norm.
  static PowerSumSeq quadratic(const BigRat& trace, const BigRat& norm);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<BigRat>& coefficients() const { return coeffs_; }
  BigRat operator()(unsigned r) const;

 private:
  std::vector<BigRat> coeffs_;
};

// Algebraic constants w^r + conj(w)^r appearing in the explicit place
// counts and irreducible-polynomial tables.
enum class Constant { t7, t9, t11, u9, u11, tau2, tau3 };

const PowerSumSeq& constant_sequence(Constant c);
BigRat power_sum(Constant c, unsigned r);
std::string_view constant_name(Constant c);
// Lookup by name ("t7", "tau2", ...); throws std::invalid_argument.
Constant constant_from_name(std::string_view name);

inline constexpr unsigned kDefaultTauBound = 8192;

// Ramanujan tau(n), the coefficient of x^n in x * prod_{k>=1} (1 - x^k)^24.
// Throws std::out_of_range unless 1 <= n <= bound.
BigInt ramanujan_tau(unsigned n, unsigned bound = kDefaultTauBound);
// tau(1..n) from one series expansion; element 0 is tau(0) = 0.
std::vector<BigInt> ramanujan_tau_table(unsigned n);

// tau(q) - p^11 tau(q / p^2) == q^2 * (mu_p^r + conj(mu_p)^r), q = p^r,
// with tau of a non-integer equal to 0.
bool tau_identity_check(int p, unsigned r, unsigned bound = kDefaultTauBound);

}  // namespace fqirr

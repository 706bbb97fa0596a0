#pragma once

// Brute-force ground truth. Nothing here uses exponential sums, Dickson
// polynomials or class numbers, so it can check every closed form.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fqirr/bigint.hpp"
#include "fqirr/context.hpp"

namespace fqirr {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1ULL << 22;

// F_q on dense indices 0..q-1 (basis-lexicographic order), for polynomial
// arithmetic. Multiplication by log/exp tables.
class SmallField {
 public:
  // The prime field F_p.
  static SmallField prime(int p);
  // Requires q <= 2^16.
  explicit SmallField(const FieldContext& ctx);

  int p() const { return p_; }
  std::uint32_t q() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  SmallField() = default;
  void build_add_table();

  int p_ = 2;
  std::uint32_t q_ = 2;
  int r_ = 1;
  std::vector<std::uint32_t> exp_;  // doubled for index sums
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // p = 3, small q
};

// Dense polynomial over a SmallField, coefficients ascending.
using SmallPoly = std::vector<std::uint32_t>;

// Distinct-degree test: f (monic, degree m >= 1) is irreducible iff
// gcd(f, x^{q^i} - x) = 1 for i = 1..floor(m/2).
bool is_irreducible(std::span<const std::uint32_t> f, const SmallField& k);
// Same for a polynomial over F_p given by small-integer coefficients.
bool is_irreducible_prime(int p, std::span<const int> f);

// Irreducibility by trial division by every monic polynomial of degree
// 1..deg/2. Slow, for cross-checking is_irreducible.
bool is_irreducible_trial_division(std::span<const std::uint32_t> f, const SmallField& k);

// Coefficients a_0..a_{m-1} of a monic degree-m polynomial (leading 1
// implicit), as elements of the base field.
using CoefficientPredicate = std::function<bool(std::span<const Elem>)>;

// Number of monic irreducible degree-m polynomials over F_q whose
// coefficients satisfy `pred`. Polynomials are scanned in base-q
// lexicographic order. Throws BudgetExceeded when q^m > budget.
BigInt enumerate_and_count(const FieldContext& ctx, unsigned m, const CoefficientPredicate& pred,
                           std::uint64_t budget = kDefaultEnumerationBudget);

// Calls visit(coeffs) for every monic irreducible degree-m polynomial whose
// coefficients pass `filter` (checked first, so it should be cheap). Same
// order and budget rule as enumerate_and_count.
void for_each_irreducible(const FieldContext& ctx, unsigned m, const CoefficientPredicate& filter,
                          const std::function<void(std::span<const Elem>)>& visit,
                          std::uint64_t budget = kDefaultEnumerationBudget);

// Census of {z in F_{q^m} : tr z = 0} by the value of tr(z^d) (with the
// convention 0^{-1} = 0). Entry k counts c = base().field().from_index(k).
// With degree_exact, only elements of degree exactly m over F_q are kept
// (0 has degree 1). Throws BudgetExceeded when q^m > budget.
std::vector<BigInt> trace_census(const ExtContext& ext, int d, bool degree_exact,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

BigInt count_elements_by_traces(const ExtContext& ext, Elem c, int d, bool degree_exact,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fqirr

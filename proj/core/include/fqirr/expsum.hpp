#pragma once

// S_d^{(m)}(u,v) = sum_z e(uz + v z^d) over F_{q^m}^* (d = -1, with
// 0^{-1} never needed) or F_{q^m} (d = 3), for u, v in F_q.

#include <cstdint>
#include <string>
#include <vector>

#include "fqirr/bigint.hpp"
#include "fqirr/context.hpp"

namespace fqirr {

inline constexpr std::uint64_t kDefaultSumBudget = 1ULL << 30;

// Throws ScopeError unless d = -1, or d = 3 with p = 2.
void check_sum_exponent(int p, int d);

// u, v are base-field elements. Accumulates in Z[zeta_p] and throws
// CrosscheckMismatch if the result is not a rational integer.
BigInt s_sum(const ExtContext& ext, int d, Elem u, Elem v);
CycInt s_sum_cyclotomic(const ExtContext& ext, int d, Elem u, Elem v);

// (-1)^{m-1} D_m(s1, q).
BigInt lift_value(const BigInt& s1, unsigned m, const BigInt& q);

// Level-one sum over F_q lifted to level m. Requires v != 0 for d = 3,
// u, v != 0 for d = -1 (std::invalid_argument otherwise).
BigInt dickson_lift(const ExtContext& ext, int d, Elem u, Elem v);
bool lift_applies(int d, bool u_zero, bool v_zero);

// Every S_d^{(m)}(u,v), (u,v) in F_q^2, from one pass over F_{q^m}.
// values[iu * q + iv], indices in basis-lexicographic order. Throws
// BudgetExceeded when q^2 * q^m > budget.
struct SumTable {
  std::uint64_t q = 0;
  std::vector<BigInt> values;
  const BigInt& at(std::uint64_t iu, std::uint64_t iv) const { return values[iu * q + iv]; }
};
SumTable all_sums(const ExtContext& ext, int d, std::uint64_t budget = kDefaultSumBudget);

struct ValueRow {
  BigInt value;
  BigInt multiplicity;
  friend bool operator==(const ValueRow&, const ValueRow&) = default;
};
// Distinct values ascending.
using ValueHistogram = std::vector<ValueRow>;

// Exhaustive histogram of S_3(u,v) over F_q^2, p = 2.
ValueHistogram s3_value_distribution(const FieldContext& ctx);

// The closed-form table at q = 2^r, one row per printed line (zero rows
// kept), and the same rows merged by value.
struct DistributionRow {
  std::string label;
  BigInt value;
  BigInt multiplicity;
};
std::vector<DistributionRow> expected_distribution_rows(int r);
ValueHistogram merge_rows(const std::vector<DistributionRow>& rows);

// u -> S_3(u, v) for fixed v != 0, p = 2, r even.
struct CarlitzRecord {
  bool cube = false;
  std::vector<BigInt> values;    // observed, distinct ascending
  std::vector<BigInt> expected;  // {0, +-2 sqrt q} or {+-sqrt q}
  BigInt s0;                     // S_3(0, v)
  BigInt expected_s0;
  bool contained() const;                        // values within expected
  bool attained() const { return values == expected; }
  bool holds() const { return contained() && attained() && s0 == expected_s0; }
};
CarlitzRecord carlitz_classify(const FieldContext& ctx, Elem v);

}  // namespace fqirr

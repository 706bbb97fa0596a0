#pragma once

// Element counts H_{c,d}(m), G_{c,d}(m) and the polynomial counts built
// on them.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqirr/bigint.hpp"
#include "fqirr/context.hpp"
#include "fqirr/oracle.hpp"
#include "fqirr/places.hpp"

namespace fqirr {

int mobius(std::uint64_t n);
// I(m) = sum_{t | m} mu(t) q^{m/t}.
BigInt irr_I(const BigInt& q, unsigned m);
// Monic irreducible polynomials of degree m, I(m) / m.
BigInt irr_total(const BigInt& q, unsigned m);

using PipelineOptions = ResolveOptions;

// #{z in F_{q^m} : tr z = 0, tr z^d = c}, from a place count.
BigInt h_count(const FieldContext& base, unsigned m, Elem c, int d, const PipelineOptions& opts = {});
// Same restricted to elements of degree m over F_q, by Moebius inversion.
BigInt g_count(const FieldContext& base, unsigned m, Elem c, int d, const PipelineOptions& opts = {});

// The printed table value of G_{c,d}(m), if the tables have that row.
std::optional<BigInt> g_fixture(const FieldContext& base, unsigned m, Elem c, int d);

enum class Case { i, ii, ii_variant };
std::string_view case_name(Case c);
Case case_from_name(std::string_view name);

// case i:        a_{m-1} = 0, a_{m-3} = c   (p = 2, m >= 3)
// case ii:       a_{m-1} = c, a_1 = 0       (m >= 2)
// case ii-variant: a_{m-1} = 0, a_1 = c a_0 (m >= 2)
struct Prescription {
  Case kind = Case::ii;
  Elem c{};
  unsigned m = 2;
};

// Throws ScopeError naming the rule that is violated.
void check_prescription(const FieldContext& base, const Prescription& pr);
int prescription_exponent(Case c);
CoefficientPredicate brute_predicate(const FieldContext& base, const Prescription& pr);

enum class CountMethod { automatic, closed, moebius, brute };
std::string_view count_method_name(CountMethod m);
CountMethod count_method_from_name(std::string_view name);

struct CountOptions {
  CountMethod method = CountMethod::automatic;
  PipelineOptions pipeline{};
  std::uint64_t brute_budget = kDefaultEnumerationBudget;
};

struct CountRecord {
  Prescription prescription;
  BigInt G;
  BigInt count;
  std::string method;
  std::vector<std::pair<std::string, BigInt>> crosschecks;
};

// count = G / m. With the automatic method the Moebius pipeline is primary
// and the printed table (if any) and brute force (within budget) are
// attached; any disagreement throws CrosscheckMismatch.
CountRecord count_polynomials(const FieldContext& base, const Prescription& pr, const CountOptions& opts = {});

enum class GTable { g0_dm1, gc_dm1, gc_d3 };
std::string_view table_name(GTable t);
GTable table_from_name(std::string_view name);

struct FixtureRow {
  unsigned m = 0;
  std::string column;
  std::string expression;
  BigInt printed;
  BigInt computed;
  bool ok() const { return printed == computed; }
};

// Every printed row of `which` in [m_lo, m_hi] for this q, each class
// column that applies, against g_count.
std::vector<FixtureRow> table_fixture_check(GTable which, const FieldContext& base, unsigned m_lo, unsigned m_hi,
                                                const PipelineOptions& opts = {});

// Class representatives c used for the columns of `which` at this q.
std::vector<std::pair<std::string, Elem>> class_representatives(GTable which, const FieldContext& base);

// G_{c,3}(4s) == q^{4s-2} - q^2 for p = 2, r odd, s an odd prime, c != 0.
bool four_s_identity_check(const FieldContext& base, unsigned s, const PipelineOptions& opts = {});

}  // namespace fqirr

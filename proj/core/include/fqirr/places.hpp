#pragma once

// N_{m,d}(beta): rational places of the fibre product L_{m,d,beta}, by
// direct character sums and by the closed forms.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqirr/bigint.hpp"
#include "fqirr/context.hpp"

namespace fqirr {

// (|U| + q - 1) * q^m character evaluations.
inline constexpr std::uint64_t kDefaultDirectBudget = 1ULL << 30;

enum class PlaceMethod { direct, expd3, kd3, explicit3, q_prime, nperm_transfer };
std::string_view method_name(PlaceMethod m);

// Zero, or (p = 2, r even) the cube class, or just nonzero.
enum class TraceClass { zero, cube, noncube, nonzero };
std::string_view class_name(TraceClass c);
TraceClass trace_class(const FieldContext& base, Elem c);

struct PlaceQuery {
  FieldContext base;
  int m = 1;
  int d = -1;
  Elem c{};                   // tr(beta), base coordinates
  std::optional<Elem> beta;   // beta itself, when F_{q^m} fits in an Elem
};

// Query for an explicit beta in ext.
PlaceQuery place_query(const ExtContext& ext, int d, Elem beta);
// Query that only fixes tr(beta) = c; closed forms need nothing more.
PlaceQuery trace_query(const FieldContext& base, int m, int d, Elem c);

// Sums T(v) = sum_u S_d^{(m)}(u, v), v in F_q^*, from one pass over
// F_{q^m}; count(beta) is then cheap for every beta.
class DirectPlaceCounter {
 public:
  DirectPlaceCounter(const ExtContext& ext, int d, std::uint64_t budget = kDefaultDirectBudget);
  const ExtContext& ext() const { return ext_; }
  int d() const { return d_; }
  BigInt count(Elem beta) const;
  // (|U| + q - 1) * q^m for this (ext, d).
  static std::uint64_t cost(const ExtContext& ext, int d);

 private:
  ExtContext ext_;
  int d_;
  std::vector<CycInt> t_;  // by base index of v, entry 0 unused
};

BigInt n_direct(const ExtContext& ext, int d, Elem beta, std::uint64_t budget = kDefaultDirectBudget);
bool direct_feasible(const FieldContext& base, int m, int d, std::uint64_t budget = kDefaultDirectBudget);

// N_{m,d}(beta_2) for tr(beta_2) != 0 from N_{m,d}(0); exact division.
BigInt nperm_transfer(const BigInt& n_at_zero, const BigInt& q, unsigned m);

// d = 3, p = 2: the three tables, with the r odd, c != 0 case transferred.
BigInt n_closed_d3(const FieldContext& base, unsigned m, TraceClass cls);

// d = -1, beta = 0.
BigInt n_kd3(const FieldContext& base, unsigned m);         // r >= 2
BigInt n_q_prime(const FieldContext& base, unsigned m);     // r = 1
BigInt n_explicit3(const FieldContext& base, unsigned m);   // r >= 2, m <= 10
// Class-number sum set S_p.
std::vector<long> kd3_trace_set(const FieldContext& base);

// Every applicable closed form for d = -1, beta = 0, each with its method.
std::vector<std::pair<PlaceMethod, BigInt>> n_closed_dm1_all(const FieldContext& base, unsigned m);
// d = -1, any trace class: the prime-field formula for r = 1, the
// class-number formula otherwise, transferred when c != 0.
BigInt n_closed_dm1(const FieldContext& base, unsigned m, TraceClass cls);

enum class MethodPolicy { automatic, direct, closed };

struct PlaceResult {
  BigInt value;
  PlaceMethod method = PlaceMethod::direct;
  std::vector<std::pair<std::string, BigInt>> crosschecks;
};

struct ResolveOptions {
  MethodPolicy policy = MethodPolicy::automatic;
  std::uint64_t direct_budget = kDefaultDirectBudget;
};

// Primary value from the cheapest closed form, every other applicable
// route attached as a crosscheck (direct only within budget). Throws
// CrosscheckMismatch on disagreement and ScopeError when no route applies.
PlaceResult resolve(const PlaceQuery& query, const ResolveOptions& opts = {});

}  // namespace fqirr

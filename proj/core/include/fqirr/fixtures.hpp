#pragma once

// Printed closed-form tables as expression strings over q, the sign
// symbols PM (= +-) and MP (= -+, i.e. -PM), and the constants t7, t9, t11,
// u9, u11, tau2, tau3 evaluated at r. Grammar: + - * ^ and parentheses,
// exponents are integers or (k/2).

#include <string>
#include <string_view>

#include "fqirr/bigint.hpp"

namespace fqirr {

struct FixtureEnv {
  int p = 2;
  int r = 1;
  int pm = 1;  // value of PM
};

// Throws std::invalid_argument on syntax errors and CrosscheckMismatch
// when a half power of q is irrational.
BigRat eval_expression(std::string_view expr, const FixtureEnv& env);

// N'_m, m = 1..10, r >= 2, PM = (-1)^r.
std::string_view explicit3_row(int p, unsigned m);

// G_{0,-1}(m) and G_{c,-1}(m), c != 0, m = 1..10, PM = (-1)^r.
std::string_view g0_dm1_row(int p, unsigned m);
std::string_view gc_dm1_row(int p, unsigned m);

// G_{c,3}(m), m = 1..30, q = 2^r. The r-even c != 0 columns use
// PM = (-1)^{r/2}.
enum class Gc3Column { even_zero, odd_zero, odd_nonzero, even_cube, even_noncube };
std::string_view gc3_row(Gc3Column col, unsigned m);
std::string_view column_name(Gc3Column col);

inline constexpr unsigned kDm1TableRows = 10;
inline constexpr unsigned kD3TableRows = 30;


}  // namespace fqirr

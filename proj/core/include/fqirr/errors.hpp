#pragma once

#include <stdexcept>
#include <string>

namespace fqirr {

// Parameter combination outside what the library counts (e.g. case (i) in
// characteristic 3). Maps to CLI exit code 3.
class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed its configured budget. Exit code 4.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes disagreed, or an exact division left a remainder.
// Always indicates a bug upstream. Exit code 2.
class CrosscheckMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fqirr

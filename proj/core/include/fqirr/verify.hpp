#pragma once

// Named self-check suites over deterministic parameter sweeps.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqirr/oracle.hpp"
#include "fqirr/places.hpp"

namespace fqirr {

struct VerifyOptions {
  std::uint64_t direct_budget = kDefaultDirectBudget;
  std::uint64_t enumeration_budget = 1ULL << 20;
};

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<Assertion> assertions;
  double seconds = 0;
  bool passed() const;
  std::size_t failures() const;
};

// distributions, carlitz, lift, places-d3, places-dm1, places, tau,
// fixtures-d3, fixtures-dm1, oracle-equivalence, structural, g-c3-4s.
const std::vector<std::string>& suite_names();

// "all" runs every suite except the aggregate "places". Unknown names
// throw std::invalid_argument.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& opts = {});
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts = {});

}  // namespace fqirr

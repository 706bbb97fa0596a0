#pragma once

#include <cstdint>

#include "fqirr/bigint.hpp"

namespace fqirr {

// Number of reduced primitive positive definite forms (a, b, c) with
// b^2 - 4ac = D. Requires D < 0, D = 0 or 1 (mod 4).
std::int64_t class_number_h(std::int64_t D);

// Kronecker class number: sum of h(D / f^2) over f^2 | D with
// D / f^2 = 0, 1 (mod 4), unweighted. Requires D < 0.
std::int64_t kronecker_H(std::int64_t D);

}  // namespace fqirr

#pragma once

// Enumerates F^* as powers of a generator, carrying z^d alongside z.

#include <cstdint>

#include "fqirr/field.hpp"

namespace fqirr::detail {

struct PowerWalk {
  PowerWalk(const Field& f, Elem g, int d)
      : field(f), gen(g), d(d), step(f.multiplication_map(g)), step_d(f.multiplication_map(d == 3 ? f.pow(g, 3) : f.inv(g))) {}

  // fn(z, w) with z = g^k, w = z^d, for k in [begin, end).
  template <typename Fn>
  void run(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    const std::uint64_t n = field.order() - 1;
    Elem z = field.pow(gen, begin);
    Elem w = field.pow(gen, d == 3 ? (3 * (begin % n)) % n : (n - begin % n) % n);
    for (std::uint64_t k = begin; k < end; ++k) {
      fn(z, w);
      z = step(z);
      w = step_d(w);
    }
  }

  const Field& field;
  Elem gen;
  int d;
  LinearMap step;
  LinearMap step_d;
};

}  // namespace fqirr::detail

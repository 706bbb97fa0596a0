#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqirr {

// Element of F_{p^n} in the polynomial basis 1, x, ..., x^{n-1}.
//
// p = 2: bit i holds the coefficient of x^i.
// p = 3: two bit planes; bit i of the low word is set when the coefficient
//        of x^i is 1, bit i of the high word when it is 2.
//
// The packed value is an implementation detail; compare elements in
// basis-lexicographic order through Field::index().
struct Elem {
  std::uint64_t bits = 0;

  friend bool operator==(Elem, Elem) = default;
};

inline constexpr int kMaxDegree = 32;

namespace detail {

inline constexpr std::uint64_t kLowWord = 0xffffffffULL;

inline Elem add3(Elem a, Elem b) {
  const std::uint64_t a1 = a.bits & kLowWord, a2 = a.bits >> 32;
  const std::uint64_t b1 = b.bits & kLowWord, b2 = b.bits >> 32;
  const std::uint64_t t = (a1 | b2) ^ (a2 | b1);
  const std::uint64_t c1 = (a2 | b2) ^ t;
  const std::uint64_t c2 = (a1 | b1) ^ t;
  return Elem{c1 | (c2 << 32)};
}

inline Elem neg3(Elem a) { return Elem{(a.bits >> 32) | ((a.bits & kLowWord) << 32)}; }

inline Elem add(int p, Elem a, Elem b) { return p == 2 ? Elem{a.bits ^ b.bits} : add3(a, b); }

}  // namespace detail

// A linear functional F_p^n -> F_p stored as its coefficient vector, packed
// like an Elem. Evaluation is a handful of popcounts.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(int p, Elem coeffs) : p_(p), coeffs_(coeffs) {}

  int operator()(Elem x) const {
    if (p_ == 2) return std::popcount(x.bits & coeffs_.bits) & 1;
    const std::uint64_t x1 = x.bits & detail::kLowWord, x2 = x.bits >> 32;
    const std::uint64_t c1 = coeffs_.bits & detail::kLowWord, c2 = coeffs_.bits >> 32;
    const int same = std::popcount(x1 & c1) + std::popcount(x2 & c2);
    const int cross = std::popcount(x1 & c2) + std::popcount(x2 & c1);
    return (same + 2 * cross) % 3;
  }

  Elem coefficients() const { return coeffs_; }

 private:
  int p_ = 2;
  Elem coeffs_{};
};

// An F_p-linear map F_p^n -> F_p^k evaluated by chunked table lookup
// (8 coordinates per chunk for p = 2, 4 for p = 3).
class LinearMap {
 public:
  LinearMap() = default;
  // columns[i] is the image of the i-th unit vector.
  LinearMap(int p, std::span<const Elem> columns);

  Elem operator()(Elem x) const {
    Elem out{};
    if (p_ == 2) {
      for (std::size_t c = 0; c < chunks_; ++c) {
        out.bits ^= table_[(c << 8) | ((x.bits >> (8 * c)) & 0xff)].bits;
      }
    } else {
      for (std::size_t c = 0; c < chunks_; ++c) {
        const std::uint64_t lo = (x.bits >> (4 * c)) & 0xf;
        const std::uint64_t hi = (x.bits >> (32 + 4 * c)) & 0xf;
        out = detail::add3(out, table_[(c << 8) | lo | (hi << 4)]);
      }
    }
    return out;
  }

  int input_dimension() const { return in_dim_; }

 private:
  int p_ = 2;
  int in_dim_ = 0;
  std::size_t chunks_ = 0;
  std::vector<Elem> table_;
};

// The finite field F_p[x]/(f) for p in {2, 3} and 1 <= deg f <= 32.
// Immutable after construction; all operations are const and thread-safe.
class Field {
 public:
  // `modulus` holds the coefficients of a monic polynomial, ascending.
  // Throws ScopeError for unsupported p or degree and std::invalid_argument
  // when the modulus is not monic or not irreducible.
  Field(int p, std::vector<int> modulus);

  // Field of degree n over F_p using the built-in default modulus.
  static Field with_default_modulus(int p, int n);

  int characteristic() const { return p_; }
  int degree() const { return n_; }
  std::uint64_t order() const { return order_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return from_digit(0, 1); }
  // Residue class of x.
  Elem generator_x() const { return n_ == 1 ? scale(one(), (p_ - modulus_[0]) % p_) : from_digit(1, 1); }

  bool is_zero(Elem a) const { return a.bits == 0; }
  Elem add(Elem a, Elem b) const { return detail::add(p_, a, b); }
  Elem neg(Elem a) const { return p_ == 2 ? a : detail::neg3(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem scale(Elem a, int k) const;
  Elem mul_x(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  // a^{-1} for a != 0, and 0 for a = 0.
  Elem inv_or_zero(Elem a) const { return is_zero(a) ? a : inv(a); }
  Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

  // Absolute trace to F_p by its definition, sum of a^{p^i} for i < n.
  int trace_by_definition(Elem a) const;
  // Same value through a precomputed linear form.
  int trace(Elem a) const { return trace_form_(a); }
  const LinearForm& trace_form() const { return trace_form_; }
  // The form z -> Tr(c z).
  LinearForm scaled_trace_form(Elem c) const;

  int digit(Elem a, int i) const;
  std::vector<int> digits(Elem a) const;
  Elem from_digits(std::span<const int> digits) const;
  Elem from_digit(int i, int value) const;

  // Basis-lexicographic index: the coefficient vector read as a base-p
  // integer with the constant term least significant.
  std::uint64_t index(Elem a) const;
  Elem from_index(std::uint64_t idx) const;

  // Multiplicative order of a != 0.
  std::uint64_t multiplicative_order(Elem a) const;
  bool is_primitive(Elem a) const { return !is_zero(a) && multiplicative_order(a) == order_ - 1; }
  // First primitive element in basis-lexicographic order.
  Elem first_primitive_element() const;
  // Distinct primes dividing order() - 1.
  const std::vector<std::uint64_t>& unit_group_primes() const { return unit_primes_; }

  // The F_p-linear map a -> c * a.
  LinearMap multiplication_map(Elem c) const;
  // The F_p-linear map a -> a^{p^k}.
  LinearMap frobenius_map(int k) const;

  // Text format: comma-separated digits ascending by basis power.
  std::string format(Elem a) const;
  Elem parse(std::string_view text) const;

 private:
  int p_;
  int n_;
  std::uint64_t order_;
  std::vector<int> modulus_;
  Elem reduction_{};  // -(modulus - x^n), i.e. x^n mod f
  std::uint64_t digit_mask_;
  LinearForm trace_form_;
  std::vector<std::uint64_t> unit_primes_;
};

// Built-in monic irreducible moduli, ascending coefficients. For each
// (p, n) this is the lexicographically smallest monic irreducible
// polynomial of degree n. Available for p = 2, n <= 32 and p = 3, n <= 20.
const std::vector<int>& default_modulus(int p, int n);
int max_default_degree(int p);

// Parses "1,0,1" into {1, 0, 1}, checking every digit lies in [0, p).
std::vector<int> parse_digits(std::string_view text, int p);
std::string format_digits(std::span<const int> digits);

// Distinct prime factors of n by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace fqirr

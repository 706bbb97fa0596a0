#include "fqirr/field.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "fqirr/errors.hpp"
#include "fqirr/oracle.hpp"

namespace fqirr {

namespace {

std::uint64_t checked_order(int p, int n) {
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
  return q;
}

}  // namespace

LinearMap::LinearMap(int p, std::span<const Elem> columns)
    : p_(p), in_dim_(static_cast<int>(columns.size())) {
  const int per_chunk = (p == 2) ? 8 : 4;
  chunks_ = (columns.size() + per_chunk - 1) / per_chunk;
  table_.assign(chunks_ << 8, Elem{});
  for (std::size_t c = 0; c < chunks_; ++c) {
    for (std::uint64_t key = 0; key < 256; ++key) {
      Elem acc{};
      bool valid = true;
      for (int j = 0; j < per_chunk; ++j) {
        const std::size_t col = c * per_chunk + static_cast<std::size_t>(j);
        int d = 0;
        if (p == 2) {
          d = static_cast<int>((key >> j) & 1);
        } else {
          const int lo = static_cast<int>((key >> j) & 1);
          const int hi = static_cast<int>((key >> (4 + j)) & 1);
          if (lo && hi) valid = false;
          d = lo ? 1 : (hi ? 2 : 0);
        }
        if (d == 0) continue;
        if (col >= columns.size()) {
          valid = false;
          continue;
        }
        Elem term = columns[col];
        if (d == 2) term = detail::neg3(term);
        acc = detail::add(p, acc, term);
      }
      if (valid) table_[(c << 8) | key] = acc;
    }
  }
}

Field::Field(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (p != 2 && p != 3) throw ScopeError("unsupported characteristic " + std::to_string(p) + " (only 2 and 3)");
  if (modulus_.size() < 2) throw std::invalid_argument("modulus must have degree at least 1");
  n_ = static_cast<int>(modulus_.size()) - 1;
  if (n_ > kMaxDegree) {
    throw ScopeError("field degree " + std::to_string(n_) + " exceeds " + std::to_string(kMaxDegree));
  }
  for (int c : modulus_) {
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible_prime(p, modulus_)) throw std::invalid_argument("reducible modulus");

  order_ = checked_order(p, n_);
  digit_mask_ = (n_ == 64) ? ~0ULL : ((1ULL << n_) - 1);

  std::vector<int> low(modulus_.begin(), modulus_.end() - 1);
  for (int& c : low) c = (p - c) % p;
  reduction_ = from_digits(low);

  std::vector<int> coeffs(static_cast<std::size_t>(n_));
  Elem basis = one();
  for (int i = 0; i < n_; ++i) {
    coeffs[static_cast<std::size_t>(i)] = trace_by_definition(basis);
    basis = mul_x(basis);
  }
  trace_form_ = LinearForm(p, from_digits(coeffs));
  unit_primes_ = prime_factors(order_ - 1);
}

Field Field::with_default_modulus(int p, int n) { return Field(p, default_modulus(p, n)); }

Elem Field::scale(Elem a, int k) const {
  k %= p_;
  if (k < 0) k += p_;
  if (k == 0) return zero();
  if (k == 1) return a;
  return detail::neg3(a);
}

Elem Field::mul_x(Elem a) const {
  if (p_ == 2) {
    const std::uint64_t top = (a.bits >> (n_ - 1)) & 1;
    std::uint64_t shifted = (a.bits << 1) & digit_mask_;
    if (top) shifted ^= reduction_.bits;
    return Elem{shifted};
  }
  const int top = digit(a, n_ - 1);
  const std::uint64_t lo = ((a.bits & detail::kLowWord) << 1) & digit_mask_;
  const std::uint64_t hi = ((a.bits >> 32) << 1) & digit_mask_;
  Elem shifted{lo | (hi << 32)};
  if (top) shifted = detail::add3(shifted, scale(reduction_, top));
  return shifted;
}

Elem Field::mul(Elem a, Elem b) const {
  Elem acc{};
  Elem cur = a;
  for (int i = 0; i < n_; ++i) {
    const int d = digit(b, i);
    if (d) acc = add(acc, scale(cur, d));
    if (i + 1 < n_) cur = mul_x(cur);
  }
  return acc;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return pow(a, order_ - 2);
}

int Field::trace_by_definition(Elem a) const {
  Elem acc{};
  Elem cur = a;
  for (int i = 0; i < n_; ++i) {
    acc = add(acc, cur);
    cur = frobenius(cur);
  }
  // The trace lies in F_p, i.e. it is a constant.
  for (int i = 1; i < n_; ++i) {
    if (digit(acc, i) != 0) throw CrosscheckMismatch("trace is not in the prime field");
  }
  return digit(acc, 0);
}

LinearForm Field::scaled_trace_form(Elem c) const {
  std::vector<int> coeffs(static_cast<std::size_t>(n_));
  Elem basis = c;
  for (int i = 0; i < n_; ++i) {
    coeffs[static_cast<std::size_t>(i)] = trace(basis);
    basis = mul_x(basis);
  }
  return LinearForm(p_, from_digits(coeffs));
}

int Field::digit(Elem a, int i) const {
  if (p_ == 2) return static_cast<int>((a.bits >> i) & 1);
  if ((a.bits >> i) & 1) return 1;
  if ((a.bits >> (32 + i)) & 1) return 2;
  return 0;
}

std::vector<int> Field::digits(Elem a) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = digit(a, i);
  return out;
}

Elem Field::from_digit(int i, int value) const {
  value %= p_;
  if (value < 0) value += p_;
  if (value == 0) return Elem{};
  if (p_ == 2 || value == 1) return Elem{1ULL << i};
  return Elem{1ULL << (32 + i)};
}

Elem Field::from_digits(std::span<const int> ds) const {
  if (static_cast<int>(ds.size()) > n_) throw std::invalid_argument("too many digits for field degree");
  Elem out{};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] < 0 || ds[i] >= p_) throw std::invalid_argument("digit out of range");
    out.bits |= from_digit(static_cast<int>(i), ds[i]).bits;
  }
  return out;
}

std::uint64_t Field::index(Elem a) const {
  if (p_ == 2) return a.bits;
  std::uint64_t idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * 3 + static_cast<std::uint64_t>(digit(a, i));
  return idx;
}

Elem Field::from_index(std::uint64_t idx) const {
  if (idx >= order_) throw std::out_of_range("element index out of range");
  if (p_ == 2) return Elem{idx};
  Elem out{};
  for (int i = 0; i < n_; ++i) {
    out.bits |= from_digit(i, static_cast<int>(idx % 3)).bits;
    idx /= 3;
  }
  return out;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (is_zero(a)) throw std::domain_error("order of zero");
  std::uint64_t ord = order_ - 1;
  for (std::uint64_t ell : unit_primes_) {
    while (ord % ell == 0 && pow(a, ord / ell) == one()) ord /= ell;
  }
  return ord;
}

Elem Field::first_primitive_element() const {
  for (std::uint64_t idx = 1; idx < order_; ++idx) {
    const Elem a = from_index(idx);
    if (is_primitive(a)) return a;
  }
  throw CrosscheckMismatch("no primitive element found");
}

LinearMap Field::multiplication_map(Elem c) const {
  std::vector<Elem> cols(static_cast<std::size_t>(n_));
  Elem cur = c;
  for (int i = 0; i < n_; ++i) {
    cols[static_cast<std::size_t>(i)] = cur;
    cur = mul_x(cur);
  }
  return LinearMap(p_, cols);
}

LinearMap Field::frobenius_map(int k) const {
  std::vector<Elem> cols(static_cast<std::size_t>(n_));
  Elem basis = one();
  for (int i = 0; i < n_; ++i) {
    Elem img = basis;
    for (int j = 0; j < k; ++j) img = frobenius(img);
    cols[static_cast<std::size_t>(i)] = img;
    basis = mul_x(basis);
  }
  return LinearMap(p_, cols);
}

std::string Field::format(Elem a) const { return format_digits(digits(a)); }

Elem Field::parse(std::string_view text) const {
  auto ds = parse_digits(text, p_);
  if (static_cast<int>(ds.size()) > n_) {
    throw std::invalid_argument("element has more digits than the field degree");
  }
  return from_digits(ds);
}

std::vector<int> parse_digits(std::string_view text, int p) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r')) tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("malformed digit '" + std::string(tok) + "'");
    }
    if (v < 0 || v >= p) throw std::invalid_argument("digit " + std::to_string(v) + " not in F_" + std::to_string(p));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty element text");
  return out;
}

std::string format_digits(std::span<const int> ds) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) os << ',';
    os << ds[i];
  }
  return os.str();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace fqirr

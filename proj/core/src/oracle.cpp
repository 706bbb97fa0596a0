#include "fqirr/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fqirr/errors.hpp"

namespace fqirr {

SmallField SmallField::prime(int p) {
  if (p != 2 && p != 3) throw ScopeError("SmallField supports p = 2, 3 only");
  SmallField k;
  k.p_ = p;
  k.q_ = static_cast<std::uint32_t>(p);
  k.r_ = 1;
  // Generator 1 of F_2^*, 2 of F_3^*.
  const std::uint32_t g = (p == 2) ? 1 : 2;
  k.exp_.assign(2 * (k.q_ - 1), 0);
  k.log_.assign(k.q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < k.q_; ++i) {
    k.exp_[i] = k.exp_[i + k.q_ - 1] = cur;
    k.log_[cur] = i;
    cur = (cur * g) % static_cast<std::uint32_t>(p);
  }
  k.build_add_table();
  return k;
}

SmallField::SmallField(const FieldContext& ctx) : p_(ctx.p()), r_(ctx.r()) {
  if (ctx.q() > (1ULL << 16)) throw ScopeError("SmallField requires q <= 2^16");
  q_ = static_cast<std::uint32_t>(ctx.q());
  const Field& f = ctx.field();
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Elem cur = f.one();
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const auto idx = static_cast<std::uint32_t>(f.index(cur));
    exp_[i] = exp_[i + q_ - 1] = idx;
    log_[idx] = i;
    cur = f.mul(cur, ctx.gamma());
  }
  build_add_table();
}

void SmallField::build_add_table() {
  if (p_ != 3 || q_ > 729) return;
  add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      std::uint32_t x = a, y = b, out = 0, scale = 1;
      for (int i = 0; i < r_; ++i) {
        out += ((x % 3 + y % 3) % 3) * scale;
        x /= 3;
        y /= 3;
        scale *= 3;
      }
      add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(out);
    }
  }
}

std::uint32_t SmallField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < r_; ++i) {
    out += ((a % 3 + b % 3) % 3) * scale;
    a /= 3;
    b /= 3;
    scale *= 3;
  }
  return out;
}

std::uint32_t SmallField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < r_; ++i) {
    out += ((3 - a % 3) % 3) * scale;
    a /= 3;
    scale *= 3;
  }
  return out;
}

std::uint32_t SmallField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

namespace {

void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f in place; f monic.
void reduce(SmallPoly& a, std::span<const std::uint32_t> f, const SmallField& k) {
  const std::size_t m = f.size() - 1;
  trim(a);
  while (a.size() > m) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - m;
    for (std::size_t i = 0; i < m; ++i) a[shift + i] = k.sub(a[shift + i], k.mul(lead, f[i]));
    a.pop_back();
    trim(a);
  }
}

SmallPoly mulmod(const SmallPoly& a, const SmallPoly& b, std::span<const std::uint32_t> f, const SmallField& k) {
  if (a.empty() || b.empty()) return {};
  SmallPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  reduce(out, f, k);
  return out;
}

SmallPoly powmod(SmallPoly base, std::uint64_t e, std::span<const std::uint32_t> f, const SmallField& k) {
  SmallPoly result{1};
  reduce(result, f, k);
  while (e) {
    if (e & 1) result = mulmod(result, base, f, k);
    e >>= 1;
    if (e) base = mulmod(base, base, f, k);
  }
  return result;
}

std::size_t gcd_degree(SmallPoly a, SmallPoly b, const SmallField& k) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic
    const std::uint32_t li = k.inv(b.back());
    for (auto& c : b) c = k.mul(c, li);
    reduce(a, b, k);
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// F_2[x] with polynomials packed into 64-bit words.
std::uint64_t mulmod2(std::uint64_t a, std::uint64_t b, std::uint64_t f, int m) {
  std::uint64_t acc = 0;
  const std::uint64_t top = 1ULL << m;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= f;
  }
  return acc;
}

int degree2(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

std::uint64_t gcd2(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const int db = degree2(b);
    while (a && degree2(a) >= db) a ^= b << (degree2(a) - db);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible_f2(std::span<const std::uint32_t> f) {
  const int m = static_cast<int>(f.size()) - 1;
  std::uint64_t fp = 0;
  for (int i = 0; i <= m; ++i) fp |= static_cast<std::uint64_t>(f[static_cast<std::size_t>(i)] & 1) << i;
  if (m == 1) return true;
  if ((fp & 1) == 0) return false;
  std::uint64_t h = 2;  // x
  for (int i = 1; i <= m / 2; ++i) {
    h = mulmod2(h, h, fp, m);
    if (degree2(gcd2(fp, h ^ 2)) >= 1) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> f, const SmallField& k) {
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("is_irreducible: f must be monic of degree >= 1");
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  if (k.q() == 2 && m < 63) return is_irreducible_f2(f);
  SmallPoly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = powmod(h, k.q(), f, k);
    SmallPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = k.sub(diff[1], 1);
    trim(diff);
    if (diff.empty()) return false;  // x^{q^i} = x mod f
    if (gcd_degree(SmallPoly(f.begin(), f.end()), diff, k) >= 1) return false;
  }
  return true;
}

bool is_irreducible_prime(int p, std::span<const int> f) {
  const SmallField k = SmallField::prime(p);
  SmallPoly g(f.begin(), f.end());
  return is_irreducible(g, k);
}

bool is_irreducible_trial_division(std::span<const std::uint32_t> f, const SmallField& k) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= k.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SmallPoly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % k.q());
        v /= k.q();
      }
      SmallPoly rem(f.begin(), f.end());
      reduce(rem, g, k);
      if (rem.empty()) return false;
    }
  }
  return true;
}

void for_each_irreducible(const FieldContext& ctx, unsigned m, const CoefficientPredicate& filter,
                          const std::function<void(std::span<const Elem>)>& visit, std::uint64_t budget) {
  if (m < 1) throw std::invalid_argument("degree must be positive");
  const std::uint64_t q = ctx.q();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (total > budget / q) throw BudgetExceeded("enumeration of q^m polynomials exceeds budget");
    total *= q;
  }
  const Field& f = ctx.field();
  std::vector<Elem> coeffs(m, Elem{});

  if (m == 1) {
    // Every x + a is irreducible.
    for (std::uint64_t a = 0; a < q; ++a) {
      coeffs[0] = f.from_index(a);
      if (filter(coeffs)) visit(coeffs);
    }
    return;
  }

  const SmallField k(ctx);
  std::vector<Elem> by_index(q);
  for (std::uint64_t i = 0; i < q; ++i) by_index[i] = f.from_index(i);

  std::vector<std::uint32_t> idx(m, 0);
  SmallPoly poly(m + 1, 0);
  poly[m] = 1;
  for (std::uint64_t n = 0; n < total; ++n) {
    if (filter(coeffs)) {
      for (unsigned i = 0; i < m; ++i) poly[i] = idx[i];
      if (is_irreducible(poly, k)) visit(coeffs);
    }
    // advance base-q odometer, a_0 fastest
    for (unsigned i = 0; i < m; ++i) {
      if (++idx[i] < q) {
        coeffs[i] = by_index[idx[i]];
        break;
      }
      idx[i] = 0;
      coeffs[i] = by_index[0];
    }
  }
}

BigInt enumerate_and_count(const FieldContext& ctx, unsigned m, const CoefficientPredicate& pred,
                           std::uint64_t budget) {
  std::uint64_t hits = 0;
  for_each_irreducible(ctx, m, pred, [&](std::span<const Elem>) { ++hits; }, budget);
  return BigInt(static_cast<unsigned long>(hits));
}

std::vector<BigInt> trace_census(const ExtContext& ext, int d, bool degree_exact, std::uint64_t budget) {
  if (d != 3 && d != -1) throw std::invalid_argument("d must be 3 or -1");
  if (ext.size() > budget) throw BudgetExceeded("element scan of F_{q^m} exceeds budget");
  const Field& F = ext.ambient();
  const Field& K = ext.base().field();
  const int m = ext.m();
  const int r = ext.base().r();
  std::vector<std::uint64_t> counts(ext.base().q(), 0);

  // x -> x^{q^n} for the maximal proper subfields F_{q^n}, n = m / ell.
  std::vector<LinearMap> subfield_tests;
  for (std::uint64_t ell : prime_factors(static_cast<std::uint64_t>(m))) {
    subfield_tests.push_back(F.frobenius_map(r * m / static_cast<int>(ell)));
  }

  // z = 0: tr 0 = tr 0^d = 0, degree 1.
  if (!degree_exact || m == 1) ++counts[0];

  const Elem g = ext.generator();
  const LinearMap step = F.multiplication_map(g);
  const LinearMap step_d = F.multiplication_map(d == 3 ? F.pow(g, 3) : F.inv(g));
  Elem z = F.one();
  Elem w = F.one();  // z^d
  for (std::uint64_t k = 0; k + 1 < F.order(); ++k, z = step(z), w = step_d(w)) {
    if (!K.is_zero(ext.relative_trace(z))) continue;
    if (degree_exact) {
      bool proper = false;
      for (const auto& frob : subfield_tests) {
        if (frob(z) == z) {
          proper = true;
          break;
        }
      }
      if (proper) continue;
    }
    ++counts[K.index(ext.relative_trace(w))];
  }
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

BigInt count_elements_by_traces(const ExtContext& ext, Elem c, int d, bool degree_exact, std::uint64_t budget) {
  const auto census = trace_census(ext, d, degree_exact, budget);
  return census[ext.base().field().index(c)];
}

}  // namespace fqirr

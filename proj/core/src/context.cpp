#include "fqirr/context.hpp"

#include <stdexcept>
#include <string>

#include "fqirr/errors.hpp"

namespace fqirr {

namespace {

Elem pack(int p, std::span<const int> ds) {
  Elem out{};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) continue;
    if (p == 2 || ds[i] == 1) {
      out.bits |= 1ULL << i;
    } else {
      out.bits |= 1ULL << (32 + i);
    }
  }
  return out;
}

int inv_mod_p(int a, int p) { return (p == 2 || a == 1) ? 1 : 2; }

Elem horner(const Field& f, std::span<const int> coeffs, Elem x) {
  Elem acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = f.add(f.mul(acc, x), f.scale(f.one(), *it));
  }
  return acc;
}

}  // namespace

FieldContext FieldContext::make(int p, int r, std::optional<std::vector<int>> modulus) {
  if (p != 2 && p != 3) throw ScopeError("unsupported characteristic " + std::to_string(p) + " (only 2 and 3)");
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (modulus) {
    if (static_cast<int>(modulus->size()) != r + 1) {
      throw std::invalid_argument("modulus degree does not match r = " + std::to_string(r));
    }
    return FieldContext(Field(p, *modulus));
  }
  return FieldContext(Field::with_default_modulus(p, r));
}

FieldContext::FieldContext(Field field) : field_(std::move(field)) {
  gamma_ = field_.first_primitive_element();
}

bool FieldContext::is_cube(Elem c) const {
  if (field_.is_zero(c)) throw std::invalid_argument("is_cube: c must be nonzero");
  if ((q() - 1) % 3 != 0) throw ScopeError("is_cube: requires q = 1 (mod 3)");
  return field_.pow(c, (q() - 1) / 3) == field_.one();
}

std::vector<Elem> FieldContext::elements() const {
  std::vector<Elem> out;
  out.reserve(q());
  for (std::uint64_t i = 0; i < q(); ++i) out.push_back(field_.from_index(i));
  return out;
}

std::optional<Elem> solve_in_span(const Field& ambient, std::span<const Elem> columns, Elem target) {
  const int p = ambient.characteristic();
  const int n = ambient.degree();
  const int k = static_cast<int>(columns.size());
  // Augmented matrix rows: n equations, k unknowns plus right-hand side.
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k + 1)));
  for (int j = 0; j < k; ++j) {
    const auto ds = ambient.digits(columns[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ds[static_cast<std::size_t>(i)];
  }
  const auto rhs = ambient.digits(target);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = rhs[static_cast<std::size_t>(i)];

  std::vector<int> pivot_row(static_cast<std::size_t>(k), -1);
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(row)]);
    auto& pr = a[static_cast<std::size_t>(row)];
    const int s = inv_mod_p(pr[static_cast<std::size_t>(col)], p);
    for (auto& v : pr) v = (v * s) % p;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      auto& ri = a[static_cast<std::size_t>(i)];
      const int f = ri[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j <= k; ++j) {
        ri[static_cast<std::size_t>(j)] = ((ri[static_cast<std::size_t>(j)] - f * pr[static_cast<std::size_t>(j)]) % p + p) % p;
      }
    }
    pivot_row[static_cast<std::size_t>(col)] = row;
    ++row;
  }
  for (int i = row; i < n; ++i) {
    if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) return std::nullopt;
  }
  std::vector<int> sol(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < k; ++j) {
    const int pr = pivot_row[static_cast<std::size_t>(j)];
    if (pr < 0) throw std::invalid_argument("solve_in_span: columns are linearly dependent");
    sol[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(k)];
  }
  return pack(p, sol);
}

ExtContext::ExtContext(FieldContext base, int m)
    : base_(std::move(base)),
      m_(m),
      ambient_(m == 1 ? base_.field()
                      : Field::with_default_modulus(base_.p(), [&] {
                          if (m < 1) throw std::invalid_argument("extension degree m must be positive");
                          const int n = base_.r() * m;
                          if (n > kMaxDegree) {
                            throw ScopeError("extension degree r*m = " + std::to_string(n) + " exceeds " +
                                             std::to_string(kMaxDegree));
                          }
                          return n;
                        }())) {
  if (m < 1) throw std::invalid_argument("extension degree m must be positive");
  const int p = base_.p();
  const int r = base_.r();
  const auto& fmod = base_.modulus();

  if (m == 1) {
    theta_ = ambient_.generator_x();
  } else {
    // Roots of the base modulus lie in F_q^* = <g^{(Q-1)/(q-1)}> (or are 0).
    const Elem g = ambient_.first_primitive_element();
    const Elem h = ambient_.pow(g, (ambient_.order() - 1) / (base_.q() - 1));
    bool found = false;
    std::uint64_t best = 0;
    if (fmod[0] == 0) {
      theta_ = Elem{};
      found = true;
    }
    Elem cand = ambient_.one();
    for (std::uint64_t j = 0; j + 1 < base_.q(); ++j) {
      if (ambient_.is_zero(horner(ambient_, fmod, cand))) {
        const std::uint64_t idx = ambient_.index(cand);
        if (!found || idx < best) {
          theta_ = cand;
          best = idx;
          found = true;
        }
      }
      cand = ambient_.mul(cand, h);
    }
    if (!found) throw CrosscheckMismatch("base modulus has no root in the ambient field");
  }
  generator_ = ambient_.first_primitive_element();

  embed_columns_.resize(static_cast<std::size_t>(r));
  Elem pw = ambient_.one();
  for (int j = 0; j < r; ++j) {
    embed_columns_[static_cast<std::size_t>(j)] = pw;
    pw = ambient_.mul(pw, theta_);
  }
  embed_map_ = LinearMap(p, embed_columns_);
  q_frobenius_ = ambient_.frobenius_map(r);

  const int n = ambient_.degree();
  std::vector<Elem> tr_cols(static_cast<std::size_t>(n));
  Elem basis = ambient_.one();
  for (int i = 0; i < n; ++i) {
    const Elem t = relative_trace_by_definition(basis);
    const auto back = unembed(t);
    if (!back) throw CrosscheckMismatch("relative trace left the base field");
    tr_cols[static_cast<std::size_t>(i)] = *back;
    basis = ambient_.mul_x(basis);
  }
  rel_trace_map_ = LinearMap(p, tr_cols);
}

std::optional<Elem> ExtContext::unembed(Elem z) const { return solve_in_span(ambient_, embed_columns_, z); }

Elem ExtContext::relative_trace_by_definition(Elem z) const {
  Elem acc{};
  Elem cur = z;
  for (int i = 0; i < m_; ++i) {
    acc = ambient_.add(acc, cur);
    cur = ambient_.pow(cur, base_.q());
  }
  return acc;
}

Elem ExtContext::solve_trace_one() const {
  const Elem one = base_.field().one();
  for (std::uint64_t idx = 0; idx < size(); ++idx) {
    const Elem z = ambient_.from_index(idx);
    if (relative_trace(z) == one) return z;
  }
  throw CrosscheckMismatch("relative trace is not surjective");
}

}  // namespace fqirr

#include "fqirr/irrcount.hpp"

#include <stdexcept>
#include <string>

#include "fqirr/errors.hpp"
#include "fqirr/fixtures.hpp"

namespace fqirr {

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

BigInt irr_I(const BigInt& q, unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  BigInt sum = 0;
  for (unsigned t = 1; t <= m; ++t) {
    if (m % t) continue;
    const int mu = mobius(t);
    if (mu) sum += mu * pow(q, m / t);
  }
  return sum;
}

BigInt irr_total(const BigInt& q, unsigned m) { return exact_div(irr_I(q, m), m, "I(m) / m"); }

BigInt h_count(const FieldContext& base, unsigned m, Elem c, int d, const PipelineOptions& opts) {
  const Field& K = base.field();
  // tr(-alpha c) = -c
  const PlaceResult n = resolve(trace_query(base, static_cast<int>(m), d, K.neg(c)), opts);
  const BigInt q = base.q_big();
  BigInt eps = 0;
  if (d == -1) eps = K.is_zero(c) ? BigInt((q - 1) * (q - 1)) : BigInt(1 - q);
  return exact_div(n.value - 1 + eps, q * q, "H_{c,d}(m)");
}

BigInt g_count(const FieldContext& base, unsigned m, Elem c, int d, const PipelineOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const auto p = static_cast<unsigned>(base.p());
  unsigned pk = 1, s = m;
  while (s % p == 0) {
    s /= p;
    pk *= p;
  }
  BigInt g = 0;
  for (unsigned t = 1; t <= s; ++t) {
    if (s % t) continue;
    const int mu = mobius(s / t);
    if (mu) g += mu * h_count(base, pk * t, c, d, opts);
  }
  if (base.field().is_zero(c)) {
    // S(m) = sum_{i<k} I(p^i s)
    for (unsigned pi = 1; pi < pk; pi *= p) g -= irr_I(base.q_big(), pi * s);
  }
  return g;
}

namespace {

std::optional<std::pair<std::string_view, FixtureEnv>> fixture_row(const FieldContext& base, unsigned m, Elem c, int d) {
  const bool zero = base.field().is_zero(c);
  FixtureEnv env{base.p(), base.r(), sign_pow(static_cast<unsigned long>(base.r()))};
  if (d == -1) {
    if (m < 1 || m > kDm1TableRows) return std::nullopt;
    return std::make_pair(zero ? g0_dm1_row(base.p(), m) : gc_dm1_row(base.p(), m), env);
  }
  if (base.p() != 2 || m < 1 || m > kD3TableRows) return std::nullopt;
  Gc3Column col;
  if (base.r() % 2 == 1) {
    col = zero ? Gc3Column::odd_zero : Gc3Column::odd_nonzero;
  } else if (zero) {
    col = Gc3Column::even_zero;
  } else {
    col = base.is_cube(c) ? Gc3Column::even_cube : Gc3Column::even_noncube;
    env.pm = sign_pow(static_cast<unsigned long>(base.r() / 2));
  }
  return std::make_pair(gc3_row(col, m), env);
}

}  // namespace

std::optional<BigInt> g_fixture(const FieldContext& base, unsigned m, Elem c, int d) {
  const auto row = fixture_row(base, m, c, d);
  if (!row) return std::nullopt;
  return to_integer(eval_expression(row->first, row->second), "printed G value");
}

std::string_view case_name(Case c) {
  switch (c) {
    case Case::i: return "i";
    case Case::ii: return "ii";
    case Case::ii_variant: return "ii-variant";
  }
  return "?";
}

Case case_from_name(std::string_view name) {
  if (name == "i") return Case::i;
  if (name == "ii") return Case::ii;
  if (name == "ii-variant") return Case::ii_variant;
  throw std::invalid_argument("unknown case '" + std::string(name) + "' (i, ii, ii-variant)");
}

void check_prescription(const FieldContext& base, const Prescription& pr) {
  if (pr.kind == Case::i) {
    if (base.p() != 2) throw ScopeError("case (i) requires characteristic 2");
    if (pr.m < 3) throw ScopeError("case (i) requires m >= 3");
  } else if (pr.m < 2) {
    throw ScopeError("case (ii) requires m >= 2");
  }
  if (base.field().index(pr.c) >= base.q()) throw std::invalid_argument("c is not an element of F_q");
}

int prescription_exponent(Case c) { return c == Case::i ? 3 : -1; }

CoefficientPredicate brute_predicate(const FieldContext& base, const Prescription& pr) {
  check_prescription(base, pr);
  const Field& K = base.field();
  const Elem c = pr.c;
  const unsigned m = pr.m;
  switch (pr.kind) {
    case Case::i:
      return [m, c](std::span<const Elem> a) { return a[m - 1].bits == 0 && a[m - 3] == c; };
    case Case::ii:
      return [m, c](std::span<const Elem> a) { return a[m - 1] == c && a[1].bits == 0; };
    case Case::ii_variant:
      return [m, c, &K](std::span<const Elem> a) { return a[m - 1].bits == 0 && a[1] == K.mul(c, a[0]); };
  }
  throw std::invalid_argument("unknown case");
}

std::string_view count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::automatic: return "auto";
    case CountMethod::closed: return "closed";
    case CountMethod::moebius: return "moebius";
    case CountMethod::brute: return "brute";
  }
  return "?";
}

CountMethod count_method_from_name(std::string_view name) {
  if (name == "auto") return CountMethod::automatic;
  if (name == "closed") return CountMethod::closed;
  if (name == "moebius") return CountMethod::moebius;
  if (name == "brute") return CountMethod::brute;
  throw std::invalid_argument("unknown method '" + std::string(name) + "' (auto, closed, moebius, brute)");
}

namespace {

BigInt count_from_g(const BigInt& g, unsigned m, std::string_view what) {
  return exact_div(g, m, std::string(what) + ": G / m");
}

bool brute_in_budget(const FieldContext& base, unsigned m, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (total > budget / base.q()) return false;
    total *= base.q();
  }
  return true;
}

}  // namespace

CountRecord count_polynomials(const FieldContext& base, const Prescription& pr, const CountOptions& opts) {
  check_prescription(base, pr);
  const int d = prescription_exponent(pr.kind);
  CountRecord rec;
  rec.prescription = pr;
  rec.method = std::string(count_method_name(opts.method == CountMethod::automatic ? CountMethod::moebius : opts.method));

  switch (opts.method) {
    case CountMethod::brute:
      rec.count = enumerate_and_count(base, pr.m, brute_predicate(base, pr), opts.brute_budget);
      rec.G = rec.count * pr.m;
      return rec;
    case CountMethod::closed: {
      auto g = g_fixture(base, pr.m, pr.c, d);
      if (!g) throw ScopeError("no printed table row for m = " + std::to_string(pr.m));
      rec.G = *g;
      rec.count = count_from_g(rec.G, pr.m, "table");
      return rec;
    }
    case CountMethod::moebius:
    case CountMethod::automatic:
      break;
  }

  rec.G = g_count(base, pr.m, pr.c, d, opts.pipeline);
  rec.count = count_from_g(rec.G, pr.m, "pipeline");
  if (opts.method == CountMethod::moebius) return rec;

  if (auto g = g_fixture(base, pr.m, pr.c, d)) {
    rec.crosschecks.emplace_back("closed", count_from_g(*g, pr.m, "table"));
  }
  if (brute_in_budget(base, pr.m, opts.brute_budget)) {
    rec.crosschecks.emplace_back("brute", enumerate_and_count(base, pr.m, brute_predicate(base, pr), opts.brute_budget));
  }
  for (const auto& [label, v] : rec.crosschecks) {
    if (v != rec.count) {
      throw CrosscheckMismatch("case " + std::string(case_name(pr.kind)) + ", m = " + std::to_string(pr.m) + ": " +
                               label + " gives " + v.get_str() + ", pipeline gives " + rec.count.get_str());
    }
  }
  return rec;
}

std::string_view table_name(GTable t) {
  switch (t) {
    case GTable::g0_dm1: return "g-0m1";
    case GTable::gc_dm1: return "g-cm1";
    case GTable::gc_d3: return "g-c3";
  }
  return "?";
}

GTable table_from_name(std::string_view name) {
  if (name == "g-0m1") return GTable::g0_dm1;
  if (name == "g-cm1") return GTable::gc_dm1;
  if (name == "g-c3") return GTable::gc_d3;
  throw std::invalid_argument("unknown table '" + std::string(name) + "' (g-0m1, g-cm1, g-c3)");
}

std::vector<std::pair<std::string, Elem>> class_representatives(GTable which, const FieldContext& base) {
  const Field& K = base.field();
  switch (which) {
    case GTable::g0_dm1: return {{"c=0", K.zero()}};
    case GTable::gc_dm1: return {{"c!=0", K.one()}};
    case GTable::gc_d3:
      if (base.p() != 2) throw ScopeError("the G_{c,3} table is for q = 2^r");
      if (base.r() % 2 == 1) return {{"r-odd:c=0", K.zero()}, {"r-odd:c!=0", K.one()}};
      return {{"r-even:c=0", K.zero()}, {"r-even:cube", K.one()}, {"r-even:non-cube", base.gamma()}};
  }
  throw std::invalid_argument("unknown table");
}

std::vector<FixtureRow> table_fixture_check(GTable which, const FieldContext& base, unsigned m_lo, unsigned m_hi,
                                                const PipelineOptions& opts) {
  const int d = which == GTable::gc_d3 ? 3 : -1;
  std::vector<FixtureRow> out;
  for (unsigned m = m_lo; m <= m_hi; ++m) {
    for (const auto& [label, c] : class_representatives(which, base)) {
      const auto row = fixture_row(base, m, c, d);
      if (!row) continue;
      FixtureRow fr;
      fr.m = m;
      fr.column = label;
      fr.expression = std::string(row->first);
      fr.printed = to_integer(eval_expression(row->first, row->second), "printed G value");
      fr.computed = g_count(base, m, c, d, opts);
      out.push_back(std::move(fr));
    }
  }
  return out;
}

bool four_s_identity_check(const FieldContext& base, unsigned s, const PipelineOptions& opts) {
  if (base.p() != 2 || base.r() % 2 == 0) throw ScopeError("the identity is for q = 2^r with r odd");
  if (s < 3 || s % 2 == 0 || prime_factors(s).size() != 1 || mobius(s) != -1) throw std::invalid_argument("s must be an odd prime");
  const unsigned m = 4 * s;
  const BigInt q = base.q_big();
  return g_count(base, m, base.field().one(), 3, opts) == pow(q, m - 2) - q * q;
}

}  // namespace fqirr

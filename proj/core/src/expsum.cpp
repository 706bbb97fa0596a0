#include "fqirr/expsum.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "fqirr/dickson.hpp"
#include "fqirr/errors.hpp"
#include "fqirr/parallel.hpp"
#include "walk.hpp"

namespace fqirr {

void check_sum_exponent(int p, int d) {
  if (d != -1 && d != 3) throw ScopeError("d must be -1 or 3");
  if (d == 3 && p != 2) throw ScopeError("d = 3 is supported in characteristic 2 only");
}

CycInt s_sum_cyclotomic(const ExtContext& ext, int d, Elem u, Elem v) {
  const int p = ext.base().p();
  check_sum_exponent(p, d);
  const Field& F = ext.ambient();
  const LinearForm fu = F.scaled_trace_form(ext.embed(u));
  const LinearForm fv = F.scaled_trace_form(ext.embed(v));
  const detail::PowerWalk walk(F, ext.generator(), d);

  std::vector<std::array<std::int64_t, 3>> slots(worker_count(), {0, 0, 0});
  parallel_chunks(F.order() - 1, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
    auto& cnt = slots[slot];
    walk.run(b, e, [&](Elem z, Elem w) {
      int k = fu(z) + fv(w);
      if (k >= p) k -= p;
      ++cnt[static_cast<std::size_t>(k)];
    });
  });
  std::array<std::int64_t, 3> total{0, 0, 0};
  for (const auto& s : slots) {
    for (int k = 0; k < 3; ++k) total[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k)];
  }
  if (d == 3) ++total[0];  // z = 0
  return CycInt::from_counts(p, total);
}

BigInt s_sum(const ExtContext& ext, int d, Elem u, Elem v) { return s_sum_cyclotomic(ext, d, u, v).real_value(); }

BigInt lift_value(const BigInt& s1, unsigned m, const BigInt& q) {
  return BigInt(sign_pow(m - 1) * dickson(m, s1, q));
}

bool lift_applies(int d, bool u_zero, bool v_zero) {
  if (d == 3) return !v_zero;
  return !u_zero && !v_zero;
}

BigInt dickson_lift(const ExtContext& ext, int d, Elem u, Elem v) {
  check_sum_exponent(ext.base().p(), d);
  if (!lift_applies(d, u.bits == 0, v.bits == 0)) {
    throw std::invalid_argument(d == 3 ? "Dickson lift of S_3 needs v != 0" : "Dickson lift of S_{-1} needs u, v != 0");
  }
  const ExtContext level1(ext.base(), 1);
  return lift_value(s_sum(level1, d, u, v), static_cast<unsigned>(ext.m()), ext.base().q_big());
}

SumTable all_sums(const ExtContext& ext, int d, std::uint64_t budget) {
  const int p = ext.base().p();
  check_sum_exponent(p, d);
  const std::uint64_t q = ext.base().q();
  const Field& F = ext.ambient();
  if (F.order() > budget / (q * q)) throw BudgetExceeded("all_sums: q^2 * q^m exceeds budget");
  const Field& K = ext.base().field();
  std::vector<LinearForm> forms;
  forms.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) forms.push_back(F.scaled_trace_form(ext.embed(K.from_index(i))));

  const std::size_t cells = static_cast<std::size_t>(q * q);
  const auto P = static_cast<std::size_t>(p);
  std::vector<std::vector<std::int64_t>> slots(worker_count());
  const detail::PowerWalk walk(F, ext.generator(), d);
  parallel_chunks(F.order() - 1, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
    auto& cnt = slots[slot];
    cnt.assign(cells * P, 0);
    std::vector<int> tu(q), tv(q);
    walk.run(b, e, [&](Elem z, Elem w) {
      for (std::uint64_t i = 0; i < q; ++i) {
        tu[i] = forms[i](z);
        tv[i] = forms[i](w);
      }
      std::int64_t* row = cnt.data();
      for (std::uint64_t i = 0; i < q; ++i) {
        for (std::uint64_t j = 0; j < q; ++j, row += P) ++row[(tu[i] + tv[j]) % p];
      }
    });
  });

  SumTable out;
  out.q = q;
  out.values.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    std::array<std::int64_t, 3> t{0, 0, 0};
    for (const auto& s : slots) {
      if (s.empty()) continue;
      for (std::size_t k = 0; k < P; ++k) t[k] += s[c * P + k];
    }
    if (d == 3) ++t[0];
    out.values.push_back(CycInt::from_counts(p, t).real_value());
  }
  return out;
}

namespace {

ValueHistogram histogram(const std::vector<BigInt>& values) {
  std::map<BigInt, unsigned long> m;
  for (const auto& v : values) ++m[v];
  ValueHistogram out;
  for (const auto& [v, n] : m) out.push_back({v, BigInt(n)});
  return out;
}

}  // namespace

ValueHistogram s3_value_distribution(const FieldContext& ctx) {
  if (ctx.p() != 2) throw ScopeError("S_3 value distribution is defined for q = 2^r");
  return histogram(all_sums(ExtContext(ctx, 1), 3).values);
}

std::vector<DistributionRow> expected_distribution_rows(int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const BigInt q = pow_ui(2, static_cast<unsigned long>(r));
  const BigInt q1 = q - 1;
  std::vector<DistributionRow> rows;
  rows.push_back({"q", q, 1});
  // only the lines whose value is rational for this parity of r
  if (r % 2 == 0) {
    const BigInt s = pow_ui(2, static_cast<unsigned long>(r / 2));
    rows.push_back({"-2sqrt(q)", -2 * s, exact_div(q1 * (q - 2 * s), 24, "distribution row")});
    rows.push_back({"-sqrt(q)", -s, exact_div(q1 * (q - s), 3, "distribution row")});
    rows.push_back({"0", 0, exact_div(q1 * q, 4, "distribution row") + q1});
    rows.push_back({"sqrt(q)", s, exact_div(q1 * (q + s), 3, "distribution row")});
    rows.push_back({"2sqrt(q)", 2 * s, exact_div(q1 * (q + 2 * s), 24, "distribution row")});
  } else {
    const BigInt s = pow_ui(2, static_cast<unsigned long>((r + 1) / 2));
    rows.push_back({"-sqrt(2q)", -s, exact_div(q1 * (q - s), 4, "distribution row")});
    rows.push_back({"0", 0, exact_div(q1 * q, 2, "distribution row") + q1});
    rows.push_back({"sqrt(2q)", s, exact_div(q1 * (q + s), 4, "distribution row")});
  }
  return rows;
}

ValueHistogram merge_rows(const std::vector<DistributionRow>& rows) {
  std::map<BigInt, BigInt> m;
  for (const auto& row : rows) {
    if (row.multiplicity != 0) m[row.value] += row.multiplicity;
  }
  ValueHistogram out;
  for (const auto& [v, n] : m) out.push_back({v, n});
  return out;
}

bool CarlitzRecord::contained() const {
  return std::includes(expected.begin(), expected.end(), values.begin(), values.end());
}

CarlitzRecord carlitz_classify(const FieldContext& ctx, Elem v) {
  if (ctx.p() != 2 || ctx.r() % 2 != 0) throw ScopeError("classification needs q = 2^r with r even");
  if (v.bits == 0) throw std::invalid_argument("v must be nonzero");
  const ExtContext level1(ctx, 1);
  const Field& K = ctx.field();
  CarlitzRecord rec;
  rec.cube = ctx.is_cube(v);
  std::vector<BigInt> seen;
  for (std::uint64_t i = 0; i < ctx.q(); ++i) {
    const Elem u = K.from_index(i);
    BigInt s = s_sum(level1, 3, u, v);
    if (i == 0) rec.s0 = s;
    seen.push_back(std::move(s));
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  rec.values = std::move(seen);

  const BigInt root = pow_ui(2, static_cast<unsigned long>(ctx.r() / 2));
  const int half = ctx.r() / 2;
  if (rec.cube) {
    rec.expected = {BigInt(-2 * root), BigInt(0), BigInt(2 * root)};
    rec.expected_s0 = sign_pow(static_cast<unsigned long>(half + 1)) * 2 * root;
  } else {
    rec.expected = {BigInt(-root), root};
    rec.expected_s0 = sign_pow(static_cast<unsigned long>(half)) * root;
  }
  return rec;
}

}  // namespace fqirr

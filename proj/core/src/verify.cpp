#include "fqirr/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fqirr/dickson.hpp"
#include "fqirr/errors.hpp"
#include "fqirr/expsum.hpp"
#include "fqirr/fixtures.hpp"
#include "fqirr/oracle.hpp"
#include "fqirr/places.hpp"
#include "fqirr/irrcount.hpp"

namespace fqirr {

bool SuiteReport::passed() const { return failures() == 0 && !assertions.empty(); }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& a : assertions) n += a.pass ? 0 : 1;
  return n;
}

namespace {

using Outcome = std::pair<bool, std::string>;

void expect(SuiteReport& rep, std::string name, const std::function<Outcome()>& fn) {
  try {
    auto [ok, detail] = fn();
    rep.assertions.push_back({std::move(name), ok, std::move(detail)});
  } catch (const std::exception& e) {
    rep.assertions.push_back({std::move(name), false, std::string("exception: ") + e.what()});
  }
}

std::string qname(const FieldContext& ctx) { return "q=" + std::to_string(ctx.q()); }

std::string show(const ValueHistogram& h) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << h[i].value.get_str() << ':' << h[i].multiplicity.get_str();
  os << '}';
  return os.str();
}

std::string mismatch(const BigInt& got, const BigInt& want) { return "got " + got.get_str() + ", expected " + want.get_str(); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

// Largest m with q^m <= limit.
unsigned max_degree(std::uint64_t q, std::uint64_t limit) {
  unsigned m = 0;
  std::uint64_t n = 1;
  while (n <= limit / q) {
    n *= q;
    ++m;
  }
  return m;
}

std::vector<Elem> nonzero_elements(const FieldContext& ctx) {
  std::vector<Elem> out;
  for (std::uint64_t i = 1; i < ctx.q(); ++i) out.push_back(ctx.field().from_index(i));
  return out;
}

// ---------------------------------------------------------------- suites

void suite_distributions(SuiteReport& rep, const VerifyOptions&) {
  for (int r = 2; r <= 6; ++r) {
    const auto ctx = FieldContext::make(2, r);
    expect(rep, qname(ctx), [&] {
      const auto got = s3_value_distribution(ctx);
      const auto want = merge_rows(expected_distribution_rows(r));
      BigInt total = 0;
      for (const auto& row : got) total += row.multiplicity;
      const bool ok = got == want && total == ctx.q_big() * ctx.q_big();
      return Outcome{ok, ok ? show(got) : "got " + show(got) + ", expected " + show(want)};
    });
  }
}

std::string show(const std::vector<BigInt>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].get_str();
  return out + "}";
}

void suite_carlitz(SuiteReport& rep, const VerifyOptions&) {
  for (int r : {2, 4, 6}) {
    const auto ctx = FieldContext::make(2, r);
    std::vector<std::pair<Elem, CarlitzRecord>> recs;
    expect(rep, qname(ctx) + ", every v != 0: value set and S_3(0,v)", [&] {
      std::size_t cubes = 0;
      for (Elem v : nonzero_elements(ctx)) {
        recs.emplace_back(v, carlitz_classify(ctx, v));
        const auto& rec = recs.back().second;
        if (!rec.contained() || rec.s0 != rec.expected_s0) {
          return Outcome{false, "v = " + ctx.field().format(v) + ": values " + show(rec.values) + " in " +
                                    show(rec.expected) + ", S_3(0,v) = " + rec.s0.get_str() + " vs " +
                                    rec.expected_s0.get_str()};
        }
        cubes += rec.cube ? 1 : 0;
      }
      return Outcome{true, std::to_string(cubes) + " cube classes, " + std::to_string(ctx.q() - 1 - cubes) + " non-cube"};
    });
    expect(rep, qname(ctx) + ", every v != 0: each value attained", [&] {
      for (const auto& [v, rec] : recs) {
        if (!rec.attained()) {
          return Outcome{false, "v = " + ctx.field().format(v) + ": observed " + show(rec.values) + ", listed " +
                                    show(rec.expected)};
        }
      }
      return Outcome{!recs.empty(), ""};
    });
  }
}

void suite_lift(SuiteReport& rep, const VerifyOptions&) {
  const std::pair<int, int> fields[] = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}};
  for (auto [p, r] : fields) {
    const auto ctx = FieldContext::make(p, r);
    const std::uint64_t q = ctx.q();
    const unsigned mmax = max_degree(q, 1ULL << 20);
    for (int d : {-1, 3}) {
      if (d == 3 && p != 2) continue;
      const auto level1 = all_sums(ExtContext(ctx, 1), d);
      for (unsigned m = 1; m <= mmax; ++m) {
        expect(rep, qname(ctx) + " d=" + std::to_string(d) + " m=" + std::to_string(m), [&] {
          const auto level = all_sums(ExtContext(ctx, static_cast<int>(m)), d, UINT64_MAX);
          std::size_t pairs = 0;
          for (std::uint64_t iu = 0; iu < q; ++iu) {
            for (std::uint64_t iv = 0; iv < q; ++iv) {
              if (!lift_applies(d, iu == 0, iv == 0)) continue;
              const BigInt lifted = lift_value(level1.at(iu, iv), m, ctx.q_big());
              if (lifted != level.at(iu, iv)) {
                return Outcome{false, "(u,v) index (" + std::to_string(iu) + "," + std::to_string(iv) + "): " +
                                          mismatch(level.at(iu, iv), lifted)};
              }
              ++pairs;
            }
          }
          return Outcome{true, std::to_string(pairs) + " pairs"};
        });
      }
    }
  }
}

// beta values covering every trace value c, two per c where possible.
std::vector<std::pair<Elem, Elem>> betas_by_trace(const ExtContext& ext) {
  const Field& F = ext.ambient();
  const Field& K = ext.base().field();
  const Elem alpha = ext.solve_trace_one();
  const Elem shift = F.sub(ext.q_frobenius()(alpha), alpha);  // trace zero
  std::vector<std::pair<Elem, Elem>> out;
  for (std::uint64_t i = 0; i < ext.base().q(); ++i) {
    const Elem c = K.from_index(i);
    const Elem beta = F.mul(alpha, ext.embed(c));
    out.emplace_back(c, beta);
    if (!F.is_zero(shift)) out.emplace_back(c, F.add(beta, shift));
  }
  return out;
}

void suite_places_d3(SuiteReport& rep, const VerifyOptions& opts) {
  for (int r : {2, 3, 4}) {
    const auto ctx = FieldContext::make(2, r);
    for (int m = 1; m <= 6; ++m) {
      expect(rep, qname(ctx) + " m=" + std::to_string(m), [&] {
        const ExtContext ext(ctx, m);
        const DirectPlaceCounter direct(ext, 3, opts.direct_budget);
        std::size_t n = 0;
        for (const auto& [c, beta] : betas_by_trace(ext)) {
          if (ext.relative_trace(beta) != c) return Outcome{false, "beta has the wrong trace"};
          const BigInt closed = n_closed_d3(ctx, static_cast<unsigned>(m), trace_class(ctx, c));
          const BigInt got = direct.count(beta);
          if (closed != got) {
            return Outcome{false, "c = " + ctx.field().format(c) + " (" +
                                      std::string(class_name(trace_class(ctx, c))) + "): direct " + got.get_str() +
                                      ", closed " + closed.get_str()};
          }
          ++n;
        }
        return Outcome{true, std::to_string(n) + " beta values"};
      });
    }
  }
}

void suite_places_dm1(SuiteReport& rep, const VerifyOptions& opts) {
  const std::pair<int, int> fields[] = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}};
  for (auto [p, r] : fields) {
    const auto ctx = FieldContext::make(p, r);
    for (unsigned m = 1; m <= 10; ++m) {
      expect(rep, qname(ctx) + " m=" + std::to_string(m), [&] {
        const auto routes = n_closed_dm1_all(ctx, m);
        std::string detail;
        for (const auto& [method, v] : routes) {
          detail += std::string(detail.empty() ? "" : ", ") + std::string(method_name(method)) + " " + v.get_str();
          if (v != routes.front().second) return Outcome{false, "closed routes disagree: " + detail};
        }
        if (ipow(ctx.q(), m) > (1ULL << 20)) return Outcome{true, detail + " (direct skipped, q^m > 2^20)"};
        const ExtContext ext(ctx, static_cast<int>(m));
        const DirectPlaceCounter direct(ext, -1, opts.direct_budget);
        for (const auto& [c, beta] : betas_by_trace(ext)) {
          const BigInt closed = n_closed_dm1(ctx, m, trace_class(ctx, c));
          const BigInt got = direct.count(beta);
          if (closed != got) {
            return Outcome{false, "c = " + ctx.field().format(c) + ": direct " + got.get_str() + ", closed " +
                                      closed.get_str()};
          }
        }
        return Outcome{true, detail + ", direct agrees"};
      });
    }
  }
}

void suite_tau(SuiteReport& rep, const VerifyOptions&) {
  for (int p : {2, 3}) {
    const unsigned rmax = p == 2 ? 13 : 8;
    for (unsigned r = 1; r <= rmax; ++r) {
      expect(rep, "p=" + std::to_string(p) + " r=" + std::to_string(r), [&] {
        const bool ok = tau_identity_check(p, r);
        return Outcome{ok, "tau(" + pow_ui(static_cast<unsigned long>(p), r).get_str() + ") = " +
                               ramanujan_tau(static_cast<unsigned>(pow_ui(static_cast<unsigned long>(p), r).get_ui())).get_str()};
      });
    }
  }
}

void fixture_rows(SuiteReport& rep, GTable which, const FieldContext& ctx, unsigned m_hi, const VerifyOptions& opts) {
  PipelineOptions po;
  po.direct_budget = opts.direct_budget;
  for (unsigned m = 1; m <= m_hi; ++m) {
    std::vector<FixtureRow> rows;
    try {
      rows = table_fixture_check(which, ctx, m, m, po);
    } catch (const std::exception& e) {
      rep.assertions.push_back({std::string(table_name(which)) + " " + qname(ctx) + " m=" + std::to_string(m), false,
                                std::string("exception: ") + e.what()});
      continue;
    }
    for (const auto& row : rows) {
      rep.assertions.push_back({std::string(table_name(which)) + " " + qname(ctx) + " m=" + std::to_string(m) + " " +
                                    row.column,
                                row.ok(), row.expression + " = " + row.printed.get_str() +
                                              (row.ok() ? "" : ", pipeline " + row.computed.get_str())});
    }
  }
}

void suite_fixtures_d3(SuiteReport& rep, const VerifyOptions& opts) {
  for (int r : {1, 2, 3, 4}) fixture_rows(rep, GTable::gc_d3, FieldContext::make(2, r), kD3TableRows, opts);
}

void suite_fixtures_dm1(SuiteReport& rep, const VerifyOptions& opts) {
  const std::pair<int, int> fields[] = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}};
  for (auto [p, r] : fields) {
    const auto ctx = FieldContext::make(p, r);
    fixture_rows(rep, GTable::g0_dm1, ctx, kDm1TableRows, opts);
    fixture_rows(rep, GTable::gc_dm1, ctx, kDm1TableRows, opts);
  }
}

void suite_oracle(SuiteReport& rep, const VerifyOptions& opts) {
  struct Anchor {
    int p, r;
    Case kind;
    unsigned c_index, m;
    long want;
  };
  for (const Anchor& a : {Anchor{2, 1, Case::ii, 0, 5, 2}, Anchor{2, 1, Case::i, 1, 3, 1}, Anchor{3, 1, Case::ii, 0, 5, 4}}) {
    const auto ctx = FieldContext::make(a.p, a.r);
    const Prescription pr{a.kind, ctx.field().from_index(a.c_index), a.m};
    expect(rep, "anchor " + qname(ctx) + " case " + std::string(case_name(a.kind)) + " c=" + std::to_string(a.c_index) +
                    " m=" + std::to_string(a.m),
           [&] {
             CountOptions co;
             co.method = CountMethod::brute;
             const BigInt brute = count_polynomials(ctx, pr, co).count;
             co.method = CountMethod::moebius;
             const BigInt pipe = count_polynomials(ctx, pr, co).count;
             return Outcome{brute == a.want && pipe == a.want, "brute " + brute.get_str() + ", pipeline " + pipe.get_str()};
           });
  }

  // every q with q^2 within the enumeration budget
  std::vector<std::pair<int, int>> fields;
  for (int p : {2, 3}) {
    for (int r = 1; ipow(static_cast<std::uint64_t>(p), 2 * static_cast<unsigned>(r)) <= opts.enumeration_budget; ++r) {
      fields.emplace_back(p, r);
    }
  }
  PipelineOptions po;
  po.direct_budget = opts.direct_budget;
  for (auto [p, r] : fields) {
    const auto ctx = FieldContext::make(p, r);
    const Field& K = ctx.field();
    const std::uint64_t q = ctx.q();
    const unsigned mmax = max_degree(q, opts.enumeration_budget);
    for (unsigned m = 2; m <= mmax; ++m) {
      expect(rep, qname(ctx) + " m=" + std::to_string(m), [&] {
        // one pass: classify every irreducible with a_{m-1} = 0 or a_1 = 0
        std::vector<std::uint64_t> ci(q, 0), cii(q, 0), cvar(q, 0);
        for_each_irreducible(
            ctx, m, [m](std::span<const Elem> a) { return a[m - 1].bits == 0 || a[1].bits == 0; },
            [&](std::span<const Elem> a) {
              if (a[1].bits == 0) ++cii[K.index(a[m - 1])];
              if (a[m - 1].bits == 0) {
                ++cvar[K.index(K.mul(a[1], K.inv(a[0])))];
                if (m >= 3) ++ci[K.index(a[m - 3])];
              }
            },
            opts.enumeration_budget);
        std::size_t checked = 0;
        for (std::uint64_t i = 0; i < q; ++i) {
          const Elem c = K.from_index(i);
          for (Case kind : {Case::i, Case::ii, Case::ii_variant}) {
            if (kind == Case::i && (p != 2 || m < 3)) continue;
            const auto& census = kind == Case::i ? ci : (kind == Case::ii ? cii : cvar);
            CountOptions co;
            co.method = CountMethod::moebius;
            co.pipeline = po;
            const BigInt pipe = count_polynomials(ctx, Prescription{kind, c, m}, co).count;
            if (pipe != census[i]) {
              return Outcome{false, "case " + std::string(case_name(kind)) + " c=" + K.format(c) + ": pipeline " +
                                        pipe.get_str() + ", brute " + std::to_string(census[i])};
            }
            ++checked;
          }
        }
        return Outcome{true, std::to_string(checked) + " prescriptions"};
      });
    }
  }

  // Predicate path of the brute counter on small cases.
  for (auto [p, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const auto ctx = FieldContext::make(p, r);
    const unsigned mmax = max_degree(ctx.q(), 1U << 12);
    for (unsigned m = 2; m <= mmax; ++m) {
      expect(rep, "auto crosscheck " + qname(ctx) + " m=" + std::to_string(m), [&] {
        for (Elem c : ctx.elements()) {
          for (Case kind : {Case::i, Case::ii, Case::ii_variant}) {
            if (kind == Case::i && (p != 2 || m < 3)) continue;
            CountOptions co;
            co.pipeline = po;
            const auto rec = count_polynomials(ctx, Prescription{kind, c, m}, co);
            bool brute = false;
            for (const auto& [label, v] : rec.crosschecks) brute = brute || label == "brute";
            if (!brute) return Outcome{false, "brute crosscheck missing"};
          }
        }
        return Outcome{true, "pipeline, table and brute agree"};
      });
    }
  }
}

void suite_structural(SuiteReport& rep, const VerifyOptions& opts) {
  PipelineOptions closed;
  closed.policy = MethodPolicy::closed;
  PipelineOptions autom;
  autom.direct_budget = opts.direct_budget;

  const std::pair<int, int> fields[] = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}};
  for (auto [p, r] : fields) {
    const auto ctx = FieldContext::make(p, r);
    const Field& K = ctx.field();
    const BigInt q = ctx.q_big();
    for (int d : {-1, 3}) {
      if (d == 3 && p != 2) continue;
      const std::string tag = qname(ctx) + " d=" + std::to_string(d);
      expect(rep, tag + ": m | G and sum_c H = q^{m-1}, m <= 12", [&] {
        for (unsigned m = 1; m <= 12; ++m) {
          BigInt hsum = 0;
          for (Elem c : ctx.elements()) {
            hsum += h_count(ctx, m, c, d, closed);
            const BigInt g = g_count(ctx, m, c, d, closed);
            if (g % m != 0 || g < 0) return Outcome{false, "G = " + g.get_str() + " at m = " + std::to_string(m)};
          }
          if (hsum != pow(q, m - 1)) return Outcome{false, "sum_c H at m = " + std::to_string(m) + ": " + hsum.get_str()};
        }
        return Outcome{true, ""};
      });
      expect(rep, tag + ": H re-aggregates from G, m <= 12", [&] {
        const auto pu = static_cast<unsigned>(p);
        for (unsigned m = 1; m <= 12; ++m) {
          unsigned pk = 1, s = m;
          while (s % pu == 0) {
            s /= pu;
            pk *= pu;
          }
          for (Elem c : {K.zero(), K.one()}) {
            BigInt sum = 0;
            if (K.is_zero(c)) {
              for (unsigned n = 1; n <= m; ++n) {
                if (m % n) continue;
                if ((m / n) % pu == 0) {
                  sum += irr_I(q, n);
                } else {
                  sum += g_count(ctx, n, c, d, closed);
                }
              }
            } else {
              for (unsigned t = 1; t <= s; ++t) {
                if (s % t == 0) sum += g_count(ctx, pk * t, c, d, closed);
              }
            }
            const BigInt h = h_count(ctx, m, c, d, closed);
            if (sum != h) return Outcome{false, "m = " + std::to_string(m) + ": " + mismatch(sum, h)};
          }
        }
        return Outcome{true, ""};
      });
      expect(rep, tag + ": H and G equal element scans, q^m <= 2^16", [&] {
        std::size_t n = 0;
        for (unsigned m = 1; ipow(ctx.q(), m) <= (1U << 16); ++m) {
          const ExtContext ext(ctx, static_cast<int>(m));
          const auto all = trace_census(ext, d, false);
          const auto exact = trace_census(ext, d, true);
          for (std::uint64_t i = 0; i < ctx.q(); ++i) {
            const Elem c = K.from_index(i);
            const BigInt h = h_count(ctx, m, c, d, autom);
            const BigInt g = g_count(ctx, m, c, d, autom);
            if (h != all[i]) return Outcome{false, "H at m=" + std::to_string(m) + ": " + mismatch(h, all[i])};
            if (g != exact[i]) return Outcome{false, "G at m=" + std::to_string(m) + ": " + mismatch(g, exact[i])};
            ++n;
          }
        }
        return Outcome{true, std::to_string(n) + " (m, c) pairs"};
      });
    }
  }

  // Field-level properties, exhaustive on small extensions.
  const std::tuple<int, int, int> exts[] = {{2, 1, 4}, {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 1, 3}, {3, 2, 2}, {2, 4, 2}, {3, 3, 2}};
  for (auto [p, r, m] : exts) {
    const auto ctx = FieldContext::make(p, r);
    const ExtContext ext(ctx, m);
    const Field& F = ext.ambient();
    const Field& K = ctx.field();
    const std::string tag = "F_" + std::to_string(ext.size()) + "/F_" + std::to_string(ctx.q());
    expect(rep, tag + ": trace transitivity, Frobenius invariance, F_q-linearity", [&] {
      for (std::uint64_t i = 0; i < ext.size(); ++i) {
        const Elem z = F.from_index(i);
        const Elem t = ext.relative_trace(z);
        if (F.trace(z) != K.trace(t)) return Outcome{false, "Tr != Tr(tr) at " + F.format(z)};
        if (F.trace(z) != F.trace_by_definition(z)) return Outcome{false, "Tr form at " + F.format(z)};
        if (ext.relative_trace(ext.q_frobenius()(z)) != t) return Outcome{false, "tr(z^q) at " + F.format(z)};
        if (t != *ext.unembed(ext.relative_trace_by_definition(z))) return Outcome{false, "tr map at " + F.format(z)};
        for (Elem a : ctx.elements()) {
          if (ext.relative_trace(F.mul(ext.embed(a), z)) != K.mul(a, t)) return Outcome{false, "linearity"};
        }
      }
      return Outcome{true, ""};
    });
    if (ext.size() <= 256) {
      expect(rep, tag + ": e(x+y) = e(x) e(y)", [&] {
        for (std::uint64_t i = 0; i < ext.size(); ++i) {
          for (std::uint64_t j = 0; j < ext.size(); ++j) {
            const Elem x = F.from_index(i), y = F.from_index(j);
            if (!(ext.char_e(F.add(x, y)) == ext.char_e(x) * ext.char_e(y))) return Outcome{false, "at " + F.format(x)};
          }
        }
        return Outcome{true, ""};
      });
    }
    expect(rep, tag + ": embedding is a homomorphism, gamma has order q-1", [&] {
      for (Elem a : ctx.elements()) {
        for (Elem b : ctx.elements()) {
          if (ext.embed(K.mul(a, b)) != F.mul(ext.embed(a), ext.embed(b))) return Outcome{false, "mul"};
          if (ext.embed(K.add(a, b)) != F.add(ext.embed(a), ext.embed(b))) return Outcome{false, "add"};
        }
      }
      const bool ok = F.multiplicative_order(ext.embedded_gamma()) == ctx.q() - 1;
      return Outcome{ok, ""};
    });
  }

  // Weil bounds, scaling, substitution symmetry.
  for (auto [p, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
    const auto ctx = FieldContext::make(p, r);
    const Field& K = ctx.field();
    const std::uint64_t q = ctx.q();
    for (int d : {-1, 3}) {
      if (d == 3 && p != 2) continue;
      for (unsigned m = 1; ipow(q, m) <= (1U << 14); ++m) {
        expect(rep, qname(ctx) + " d=" + std::to_string(d) + " m=" + std::to_string(m) + ": Weil bound, scaling", [&] {
          const auto t = all_sums(ExtContext(ctx, static_cast<int>(m)), d);
          const BigInt bound2 = 4 * pow(ctx.q_big(), m);
          for (std::uint64_t iu = 0; iu < q; ++iu) {
            for (std::uint64_t iv = 0; iv < q; ++iv) {
              const bool in_scope = d == 3 ? (iu || iv) : (iu && iv);
              const BigInt& s = t.at(iu, iv);
              if (in_scope && s * s > bound2) return Outcome{false, "|S| = " + s.get_str()};
              if (iu) {
                const Elem u = K.from_index(iu);
                const Elem ud = d == 3 ? K.inv(K.pow(u, 3)) : u;  // u^{-d}
                const Elem w = K.mul(K.from_index(iv), ud);
                if (t.at(1, K.index(w)) != s) return Outcome{false, "scaling at u index " + std::to_string(iu)};
              }
            }
          }
          if (d == 3 && r % 2 == 0) {
            const Elem g = ctx.gamma();
            BigInt a = 0, b = 0;
            for (std::uint64_t iu = 0; iu < q; ++iu) {
              a += t.at(iu, K.index(g));
              b += t.at(iu, K.index(K.mul(g, g)));
            }
            if (a != b) return Outcome{false, "substitution symmetry: " + mismatch(b, a)};
          }
          return Outcome{true, ""};
        });
      }
    }
  }

  // unweighted class numbers reproduce direct counts
  for (auto [p, r] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
    const auto ctx = FieldContext::make(p, r);
    expect(rep, qname(ctx) + ": class-number formula equals direct counts, m <= 6", [&] {
      for (int m = 1; m <= 6; ++m) {
        const auto res = resolve(trace_query(ctx, m, -1, ctx.field().zero()), autom);
        bool direct = false;
        for (const auto& [label, v] : res.crosschecks) direct = direct || label == "direct";
        if (res.method != PlaceMethod::kd3 || !direct) return Outcome{false, "no direct count at m = " + std::to_string(m)};
      }
      return Outcome{true, ""};
    });
  }

  for (int r : {2, 4, 6, 8}) {
    const auto ctx = FieldContext::make(2, r);
    expect(rep, qname(ctx) + ": cube classes split (q-1)/3 : 2(q-1)/3", [&] {
      std::uint64_t cubes = 0;
      for (Elem c : nonzero_elements(ctx)) cubes += ctx.is_cube(c) ? 1 : 0;
      return Outcome{3 * cubes == ctx.q() - 1, std::to_string(cubes) + " cubes"};
    });
  }
}

void suite_four_s(SuiteReport& rep, const VerifyOptions& opts) {
  PipelineOptions po;
  po.direct_budget = opts.direct_budget;
  for (int r : {1, 3}) {
    const auto ctx = FieldContext::make(2, r);
    for (unsigned s : {3U, 5U, 7U}) {
      expect(rep, qname(ctx) + " s=" + std::to_string(s), [&] {
        const unsigned m = 4 * s;
        const BigInt g = g_count(ctx, m, ctx.field().one(), 3, po);
        const BigInt want = pow(ctx.q_big(), m - 2) - ctx.q_big() * ctx.q_big();
        return Outcome{four_s_identity_check(ctx, s, po) && g == want, "G_{c,3}(" + std::to_string(m) + ") = " + g.get_str()};
      });
    }
  }
}

using SuiteFn = void (*)(SuiteReport&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"distributions", suite_distributions}, {"carlitz", suite_carlitz},
      {"lift", suite_lift},                   {"places-d3", suite_places_d3},
      {"places-dm1", suite_places_dm1},       {"tau", suite_tau},
      {"fixtures-d3", suite_fixtures_d3},     {"fixtures-dm1", suite_fixtures_dm1},
      {"oracle-equivalence", suite_oracle},   {"structural", suite_structural},
      {"g-c3-4s", suite_four_s},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    out.insert(out.begin() + 5, "places");
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
  if (name == "places") {
    SuiteReport rep{"places", {}, 0};
    for (const char* part : {"places-d3", "places-dm1"}) {
      auto sub = run_suite(part, opts);
      rep.seconds += sub.seconds;
      for (auto& a : sub.assertions) rep.assertions.push_back({sub.name + ": " + a.name, a.pass, std::move(a.detail)});
    }
    return rep;
  }
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteReport rep{n, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    fn(rep, opts);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& opts) {
  if (name != "all") return {run_suite(name, opts)};
  std::vector<SuiteReport> out;
  for (const auto& [n, fn] : registry()) out.push_back(run_suite(n, opts));
  return out;
}

}  // namespace fqirr

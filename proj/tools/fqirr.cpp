// fqirr: counts of irreducible polynomials with two prescribed coefficients.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqirr/context.hpp"
#include "fqirr/errors.hpp"
#include "fqirr/expsum.hpp"
#include "fqirr/irrcount.hpp"
#include "fqirr/parallel.hpp"
#include "fqirr/places.hpp"
#include "fqirr/verify.hpp"

using json = nlohmann::ordered_json;
using namespace fqirr;

namespace {

struct Common {
  int p = 2;
  int r = 1;
  std::string modulus_file;
  std::string format;  // empty: json, or csv for tables
  unsigned threads = 0;
  std::uint64_t direct_budget = kDefaultDirectBudget;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

void add_common(CLI::App* sub, Common& c, bool field = true) {
  if (field) {
    sub->add_option("--p", c.p, "characteristic (2 or 3)")->required();
    sub->add_option("--r", c.r, "q = p^r")->check(CLI::PositiveNumber);
    sub->add_option("--modulus", c.modulus_file, "file whose first line is the base modulus")->check(CLI::ExistingFile);
  }
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_flag_callback("--json", [&c] { c.format = "json"; });
  sub->add_flag_callback("--csv", [&c] { c.format = "csv"; });
  sub->add_option("--threads", c.threads, "worker threads (default: FQIRR_THREADS or hardware)");
  sub->add_option("--direct-budget", c.direct_budget, "character evaluations allowed for direct place counts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--enumeration-budget", c.enumeration_budget, "largest q^m for brute force")
      ->check(CLI::PositiveNumber);
}

FieldContext make_field(const Common& c) {
  if (c.threads) set_worker_count(c.threads);
  if (c.modulus_file.empty()) return FieldContext::make(c.p, c.r);
  std::ifstream in(c.modulus_file);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return FieldContext::make(c.p, c.r, parse_digits(line, c.p));
  }
  throw std::invalid_argument("modulus file " + c.modulus_file + " has no polynomial");
}

std::string str(const BigInt& x) { return x.get_str(); }

void emit(const Common& c, const json& j, const std::vector<std::string>& csv_header,
          const std::vector<std::vector<std::string>>& csv_rows) {
  if (c.format.empty() || c.format == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  const char sep = c.format == "csv" ? ',' : '\t';
  for (std::size_t i = 0; i < csv_header.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << csv_header[i];
  std::cout << '\n';
  for (const auto& row : csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << row[i];
    std::cout << '\n';
  }
}

json checks_json(const std::vector<std::pair<std::string, BigInt>>& xs) {
  json out = json::array();
  for (const auto& [label, v] : xs) out.push_back({{"label", label}, {"value", str(v)}});
  return out;
}

// "5", "1..30"; an empty range (lo > hi) is allowed.
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned m = static_cast<unsigned>(std::stoul(s));
      return {m, m};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))), static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad degree range '" + s + "'");
  }
}

struct CountArgs {
  unsigned m = 2;
  std::string kind = "ii";
  std::string c = "0";
  std::string method = "auto";
};

int run_count(const Common& com, const CountArgs& a, bool brute) {
  const auto ctx = make_field(com);
  const Prescription pr{case_from_name(a.kind), ctx.field().parse(a.c), a.m};
  CountOptions co;
  co.method = brute ? CountMethod::brute : count_method_from_name(a.method);
  co.pipeline.direct_budget = com.direct_budget;
  co.brute_budget = com.enumeration_budget;
  const auto rec = count_polynomials(ctx, pr, co);
  const json j = {{"p", ctx.p()},
                  {"r", ctx.r()},
                  {"m", a.m},
                  {"case", std::string(case_name(pr.kind))},
                  {"c", ctx.field().format(pr.c)},
                  {"G", str(rec.G)},
                  {"count", str(rec.count)},
                  {"method", rec.method},
                  {"crosschecks", checks_json(rec.crosschecks)}};
  emit(com, j, {"p", "r", "m", "case", "c", "G", "count", "method"},
       {{std::to_string(ctx.p()), std::to_string(ctx.r()), std::to_string(a.m), std::string(case_name(pr.kind)),
         "\"" + ctx.field().format(pr.c) + "\"", str(rec.G), str(rec.count), rec.method}});
  return 0;
}

struct PlacesArgs {
  int m = 1;
  int d = -1;
  std::string beta;
  std::string c;
  std::string method = "auto";
};

int run_places(const Common& com, const PlacesArgs& a) {
  const auto ctx = make_field(com);
  PlaceQuery query = trace_query(ctx, a.m, a.d, ctx.field().zero());
  std::optional<ExtContext> ext;
  if (!a.beta.empty()) {
    ext.emplace(ctx, a.m);
    query = place_query(*ext, a.d, ext->ambient().parse(a.beta));
  } else if (!a.c.empty()) {
    query = trace_query(ctx, a.m, a.d, ctx.field().parse(a.c));
  }
  ResolveOptions ro;
  ro.direct_budget = com.direct_budget;
  if (a.method == "direct") ro.policy = MethodPolicy::direct;
  if (a.method == "closed") ro.policy = MethodPolicy::closed;
  const auto res = resolve(query, ro);
  json j = {{"p", ctx.p()}, {"r", ctx.r()}, {"m", a.m}, {"d", a.d}};
  if (query.beta) j["beta"] = ext->ambient().format(*query.beta);
  j["c"] = ctx.field().format(query.c);
  j["value"] = str(res.value);
  j["method"] = std::string(method_name(res.method));
  j["crosschecks"] = checks_json(res.crosschecks);
  emit(com, j, {"p", "r", "m", "d", "c", "value", "method"},
       {{std::to_string(ctx.p()), std::to_string(ctx.r()), std::to_string(a.m), std::to_string(a.d),
         "\"" + ctx.field().format(query.c) + "\"", str(res.value), std::string(method_name(res.method))}});
  return 0;
}

struct ExpsumArgs {
  int m = 1;
  int d = 3;
  std::string u = "0";
  std::string v = "0";
  bool histogram = false;
};

int run_expsum(Common com, const ExpsumArgs& a) {
  const auto ctx = make_field(com);
  if (a.histogram) {
    const auto h = s3_value_distribution(ctx);
    json rows = json::array();
    std::vector<std::vector<std::string>> csv;
    for (const auto& row : h) {
      rows.push_back({{"value", str(row.value)}, {"multiplicity", str(row.multiplicity)}});
      csv.push_back({str(row.value), str(row.multiplicity)});
    }
    emit(com, {{"p", ctx.p()}, {"r", ctx.r()}, {"d", 3}, {"histogram", rows}}, {"value", "multiplicity"}, csv);
    return 0;
  }
  const ExtContext ext(ctx, a.m);
  const Elem u = ctx.field().parse(a.u), v = ctx.field().parse(a.v);
  const BigInt s = s_sum(ext, a.d, u, v);
  emit(com,
       {{"p", ctx.p()}, {"r", ctx.r()}, {"m", a.m}, {"d", a.d}, {"u", ctx.field().format(u)},
        {"v", ctx.field().format(v)}, {"value", str(s)}},
       {"p", "r", "m", "d", "u", "v", "value"},
       {{std::to_string(ctx.p()), std::to_string(ctx.r()), std::to_string(a.m), std::to_string(a.d),
         "\"" + ctx.field().format(u) + "\"", "\"" + ctx.field().format(v) + "\"", str(s)}});
  return 0;
}

struct TableArgs {
  std::string which;
  std::string range = "1..10";
  std::string method = "closed";
};

int run_table(Common com, const TableArgs& a) {
  const auto ctx = make_field(com);
  const GTable which = table_from_name(a.which);
  const int d = which == GTable::gc_d3 ? 3 : -1;
  const auto [lo, hi] = parse_range(a.range);
  if (lo == 0) throw std::invalid_argument("degrees start at 1");
  PipelineOptions po;
  po.direct_budget = com.direct_budget;
  if (a.method == "closed") po.policy = MethodPolicy::closed;
  if (a.method == "direct") po.policy = MethodPolicy::direct;
  const auto reps = class_representatives(which, ctx);
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (unsigned m = lo; m <= hi; ++m) {
    for (const auto& [cls, c] : reps) {
      const BigInt g = g_count(ctx, m, c, d, po);
      const BigInt n = exact_div(g, BigInt(static_cast<unsigned long>(m)), "G / m");
      rows.push_back({{"m", m}, {"class", cls}, {"c", ctx.field().format(c)}, {"G", str(g)}, {"count", str(n)}});
      csv.push_back({std::to_string(m), cls, "\"" + ctx.field().format(c) + "\"", str(g), str(n)});
    }
  }
  if (com.format.empty()) com.format = "csv";
  emit(com, {{"table", a.which}, {"p", ctx.p()}, {"r", ctx.r()}, {"rows", rows}}, {"m", "class", "c", "G", "count"}, csv);
  return 0;
}

int run_verify(const Common& com, const std::string& suite) {
  if (com.threads) set_worker_count(com.threads);
  VerifyOptions vo;
  vo.direct_budget = com.direct_budget;
  const auto reports = run_suites(suite, vo);
  bool ok = true;
  if (com.format.empty() || com.format == "json") {
    json out = json::array();
    for (const auto& rep : reports) {
      json as = json::array();
      for (const auto& x : rep.assertions) as.push_back({{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
      out.push_back({{"suite", rep.name}, {"passed", rep.passed()}, {"failures", rep.failures()}, {"assertions", as}});
      ok = ok && rep.passed();
    }
    std::cout << out.dump(2) << '\n';
  } else {
    const char sep = com.format == "csv" ? ',' : '\t';
    if (com.format == "csv") std::cout << "suite,assertion,result,detail\n";
    for (const auto& rep : reports) {
      for (const auto& x : rep.assertions) {
        std::cout << rep.name << sep << '"' << x.name << '"' << sep << (x.pass ? "PASS" : "FAIL") << sep << '"'
                  << x.detail << "\"\n";
      }
      ok = ok && rep.passed();
    }
  }
  return ok ? 0 : 1;
}

int run_inspect(const Common& com, int m) {
  const auto ctx = make_field(com);
  const Field& K = ctx.field();
  json j = {{"p", ctx.p()}, {"r", ctx.r()}, {"q", ctx.q()}, {"modulus", format_digits(ctx.modulus())},
            {"gamma", K.format(ctx.gamma())}};
  std::vector<std::vector<std::string>> csv;
  if (ctx.q() <= 4096) {
    json els = json::array();
    for (Elem c : ctx.elements()) {
      json e = {{"element", K.format(c)}, {"index", K.index(c)}, {"trace", K.trace(c)}};
      std::string cls = "zero";
      if (!K.is_zero(c)) {
        e["order"] = K.multiplicative_order(c);
        cls = std::string(class_name(trace_class(ctx, c)));
      }
      e["class"] = cls;
      csv.push_back({"\"" + K.format(c) + "\"", std::to_string(K.index(c)), std::to_string(K.trace(c)), cls});
      els.push_back(e);
    }
    j["elements"] = els;
  }
  if (m > 1) {
    const ExtContext ext(ctx, m);
    const Field& F = ext.ambient();
    j["extension"] = {{"m", m},
                      {"modulus", format_digits(F.modulus())},
                      {"theta", F.format(ext.theta())},
                      {"generator", F.format(ext.generator())},
                      {"alpha", F.format(ext.solve_trace_one())}};
  }
  emit(com, j, {"element", "index", "trace", "class"}, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of monic irreducible polynomials over F_q with two prescribed coefficients"};
  app.require_subcommand(1);

  Common com;
  CountArgs ca;
  auto* count = app.add_subcommand("count", "count irreducibles for one prescription");
  auto* brute = app.add_subcommand("brute", "same as count, by exhaustive enumeration");
  for (auto* sub : {count, brute}) {
    add_common(sub, com);
    sub->add_option("--m", ca.m, "degree")->required();
    sub->add_option("--case", ca.kind, "i, ii or ii-variant")->check(CLI::IsMember({"i", "ii", "ii-variant"}));
    sub->add_option("--c", ca.c, "prescribed value, comma-separated digits");
  }
  count->add_option("--method", ca.method)->check(CLI::IsMember({"auto", "closed", "moebius", "brute"}));

  PlacesArgs pa;
  auto* places = app.add_subcommand("places", "rational place count N_{m,d}(beta)");
  add_common(places, com);
  places->add_option("--m", pa.m)->required()->check(CLI::PositiveNumber);
  places->add_option("--d", pa.d)->check(CLI::IsMember({-1, 3}));
  auto* beta_opt = places->add_option("--beta", pa.beta, "beta in F_{q^m}, digits over the default modulus");
  places->add_option("--c", pa.c, "only fix tr(beta) = c")->excludes(beta_opt);
  places->add_option("--method", pa.method)->check(CLI::IsMember({"auto", "direct", "closed"}));

  ExpsumArgs ea;
  auto* expsum = app.add_subcommand("expsum", "exponential sum S_d^{(m)}(u,v), or the d = 3 histogram");
  add_common(expsum, com);
  expsum->add_option("--m", ea.m)->check(CLI::PositiveNumber);
  expsum->add_option("--d", ea.d)->check(CLI::IsMember({-1, 3}));
  expsum->add_option("--u", ea.u);
  expsum->add_option("--v", ea.v);
  expsum->add_flag("--histogram", ea.histogram, "value distribution of S_3 over F_q^2");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "G table rows for a range of degrees");
  add_common(table, com);
  table->add_option("which", ta.which)->required()->check(CLI::IsMember({"g-0m1", "g-cm1", "g-c3"}));
  table->add_option("--m", ta.range, "degree or range lo..hi");
  table->add_option("--method", ta.method)->check(CLI::IsMember({"auto", "direct", "closed"}));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  add_common(verify, com, false);
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  verify->add_option("suite", suite)->check(CLI::IsMember(names));

  int inspect_m = 1;
  auto* inspect = app.add_subcommand("field-inspect", "field elements, classes, moduli");
  add_common(inspect, com);
  inspect->add_option("--m", inspect_m, "also describe F_{q^m}")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*count) return run_count(com, ca, false);
    if (*brute) return run_count(com, ca, true);
    if (*places) return run_places(com, pa);
    if (*expsum) return run_expsum(com, ea);
    if (*table) return run_table(com, ta);
    if (*verify) return run_verify(com, suite);
    if (*inspect) return run_inspect(com, inspect_m);
  } catch (const CrosscheckMismatch& e) {
    std::cerr << "fqirr: crosscheck mismatch: " << e.what() << '\n';
    return 2;
  } catch (const ScopeError& e) {
    std::cerr << "fqirr: " << e.what() << '\n';
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "fqirr: budget exceeded: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "fqirr: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

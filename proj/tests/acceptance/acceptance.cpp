// One line per acceptance criterion. All comparisons are exact; the only
// tolerances are the wall-clock limits below.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "fqirr/verify.hpp"

using namespace fqirr;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<const char*> suites;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "S_3 value distributions, q = 4..64", {"distributions"}, 30},
    {2, "Carlitz classification, q = 4, 16, 64", {"carlitz"}, 10},
    {3, "Dickson lift equals the level-m sum, q^m <= 2^20", {"lift"}, 120},
    {4, "d = 3 closed place counts equal direct counts", {"places-d3"}, 180},
    {5, "d = -1 place-count routes agree", {"places-dm1"}, 180},
    {6, "tau identity, p = 2 r <= 13, p = 3 r <= 8", {"tau"}, 30},
    {7, "printed G tables equal the pipeline", {"fixtures-d3", "fixtures-dm1"}, 300},
    {8, "pipeline equals brute force, q^m <= 2^20", {"oracle-equivalence"}, 600},
    {9, "structural properties", {"structural"}, 120},
    {10, "G_{c,3}(4s) = q^{4s-2} - q^2", {"g-c3-4s"}, 60},
};

bool run(const Criterion& c, bool verbose) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, failed = 0;
  std::vector<std::string> notes;
  for (const char* s : c.suites) {
    const auto rep = run_suite(s);
    for (const auto& a : rep.assertions) {
      ++total;
      if (!a.pass) {
        ++failed;
        notes.push_back(rep.name + ": " + a.name + ": " + a.detail);
      } else if (verbose) {
        std::printf("    ok   %s: %s %s\n", rep.name.c_str(), a.name.c_str(), a.detail.c_str());
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= c.limit_seconds;
  const bool pass = failed == 0 && total > 0 && in_time;
  std::printf("criterion %d: %s  %s  [%zu/%zu assertions, %.1fs of %.0fs]\n", c.id, pass ? "PASS" : "FAIL", c.title,
              total - failed, total, secs, c.limit_seconds);
  for (const auto& n : notes) std::printf("    FAIL %s\n", n.c_str());
  if (!in_time) std::printf("    FAIL time limit exceeded\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "-v")) {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N] [-v]\n", argv[0]);
      return 64;
    }
  }
  bool all = true, any = false;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    any = true;
    all = run(c, verbose) && all;
  }
  if (!any) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 64;
  }
  return all ? 0 : 1;
}

#include "fqirr/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fqirr {

namespace {

std::atomic<unsigned> g_override{0};

unsigned from_environment() {
  if (const char* s = std::getenv("FQIRR_THREADS")) {
    try {
      const long v = std::stol(s);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

unsigned worker_count() {
  const unsigned o = g_override.load();
  if (o) return o;
  static const unsigned env = from_environment();
  return env;
}

void set_worker_count(unsigned n) { g_override.store(n); }

unsigned parallel_chunks(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
  std::uint64_t chunks = worker_count();
  // tiny ranges are not worth a thread
  if (n < 4096 * chunks) chunks = std::max<std::uint64_t>(1, n / 4096);
  if (chunks <= 1) {
    fn(0, n, 0);
    return 1;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first;
  std::mutex mu;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t b = n * c / chunks;
    const std::uint64_t e = n * (c + 1) / chunks;
    pool.emplace_back([&, b, e, c] {
      try {
        fn(b, e, static_cast<unsigned>(c));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
  return static_cast<unsigned>(chunks);
}

}  // namespace fqirr

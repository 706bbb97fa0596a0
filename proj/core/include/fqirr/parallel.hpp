#pragma once

#include <cstdint>
#include <functional>

namespace fqirr {

// Worker count: set_worker_count() if called, else FQIRR_THREADS, else the
// hardware concurrency. Always >= 1.
unsigned worker_count();
void set_worker_count(unsigned n);

// Splits [0, n) into at most worker_count() contiguous chunks and runs
// fn(begin, end, slot) on each, slot in [0, chunks). Returns the number of
// chunks used. The first exception thrown by a worker is rethrown.
unsigned parallel_chunks(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

}  // namespace fqirr

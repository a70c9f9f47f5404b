#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace gwf {

/// Run fn(begin, end) over a partition of [0, n) into contiguous chunks,
/// one per worker.  Chunks are disjoint, so writes to per-index slots need
/// no synchronisation; with exact arithmetic any per-chunk accumulation
/// merged in chunk order is identical to the serial result.
inline void parallelChunks(uint64_t n, int threads,
                           const std::function<void(int, uint64_t, uint64_t)>& fn) {
  if (threads < 1) threads = 1;
  if (uint64_t(threads) > n) threads = int(n ? n : 1);
  if (threads == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  uint64_t per = n / threads, extra = n % threads, begin = 0;
  for (int w = 0; w < threads; ++w) {
    uint64_t len = per + (uint64_t(w) < extra ? 1 : 0);
    pool.emplace_back(fn, w, begin, begin + len);
    begin += len;
  }
  for (auto& t : pool) t.join();
}

}  // namespace gwf

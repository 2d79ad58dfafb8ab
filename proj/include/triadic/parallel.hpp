#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace triadic {

// Effective worker count: requested if > 0, else the TRIADIC_THREADS
// environment variable, else hardware concurrency.
unsigned resolve_threads(int requested);

// Runs fn(block, worker) for every block in [0, num_blocks), distributed
// over `threads` workers via an atomic counter. Callers must make results
// independent of which worker runs which block (per-block outputs, or
// commutative integer accumulation) so that runs are bit-identical for any
// worker count.
template <typename Fn>
void parallel_blocks(uint64_t num_blocks, unsigned threads, Fn&& fn) {
  if (threads <= 1 || num_blocks <= 1) {
    for (uint64_t b = 0; b < num_blocks; ++b) fn(b, 0u);
    return;
  }
  if (threads > num_blocks) threads = static_cast<unsigned>(num_blocks);
  std::atomic<uint64_t> next{0};
  auto worker = [&](unsigned id) {
    for (;;) {
      const uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= num_blocks) return;
      fn(b, id);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();
}

}  // namespace triadic

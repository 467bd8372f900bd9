#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dirset {

// Resolve a user-facing thread-count flag: 0 means "auto".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Fixed block size for every parallel scan in the library. The partition of
// work into blocks must not depend on the thread count, otherwise results
// could differ between runs; see block_reduce below.
inline constexpr std::uint64_t kParallelBlock = 16384;

// Deterministic parallel map-reduce over the index range [0, n).
//
// The range is split into fixed-size blocks. Each block is processed
// sequentially by map_block(begin, end) -> T, and the per-block results are
// combined strictly in block order with combine(acc, block_result). Because
// the block boundaries and the combination order are independent of how many
// threads execute the blocks, the result is bit-identical for any thread
// count as long as map_block and combine are themselves deterministic.
template <class T, class MapBlock, class Combine>
T block_reduce(std::uint64_t n, T init, MapBlock map_block, Combine combine, int threads = 0) {
  if (n == 0) return init;
  const std::uint64_t n_blocks = (n + kParallelBlock - 1) / kParallelBlock;
  const int n_threads = resolve_threads(threads);

  if (n_threads <= 1 || n_blocks == 1) {
    T acc = map_block(0, std::min(n, kParallelBlock));
    for (std::uint64_t b = 1; b < n_blocks; ++b) {
      const std::uint64_t lo = b * kParallelBlock;
      const std::uint64_t hi = std::min(n, lo + kParallelBlock);
      acc = combine(std::move(acc), map_block(lo, hi));
    }
    return acc;
  }

  std::vector<T> results(n_blocks, init);
  std::vector<std::exception_ptr> errors(n_blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) return;
      const std::uint64_t lo = b * kParallelBlock;
      const std::uint64_t hi = std::min(n, lo + kParallelBlock);
      try {
        results[b] = map_block(lo, hi);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<std::uint64_t>(n_blocks, static_cast<std::uint64_t>(n_threads)));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // Rethrow the error of the lowest failing block, matching what the
  // sequential path would have raised first.
  for (std::uint64_t b = 0; b < n_blocks; ++b) {
    if (errors[b]) std::rethrow_exception(errors[b]);
  }

  T acc = std::move(results[0]);
  for (std::uint64_t b = 1; b < n_blocks; ++b) acc = combine(std::move(acc), std::move(results[b]));
  return acc;
}

}  // namespace dirset

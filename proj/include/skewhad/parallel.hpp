#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace skewhad {

// 0 => one worker per hardware thread.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Splits [0, n) into contiguous chunks, one per worker, and runs
// fn(worker_index, begin, end) on each. Workers must write only into
// worker-indexed slots; the caller merges in worker order so results
// do not depend on scheduling.
template <class Fn>
void parallel_chunks(std::uint64_t n, int threads, Fn&& fn) {
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(n, static_cast<std::uint64_t>(resolve_threads(threads))));
  if (workers <= 1) {
    if (n > 0) fn(0, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t base = n / static_cast<std::uint64_t>(workers);
  const std::uint64_t rem = n % static_cast<std::uint64_t>(workers);
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t len = base + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    const std::uint64_t end = begin + len;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace skewhad

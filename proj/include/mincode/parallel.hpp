#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace mincode {

/// Resolves a requested worker count; 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous blocks and runs fn(block, begin, end) for each.
///
/// Block b always covers the same range for a given (count, workers), so callers
/// that merge per-block results in block order get output independent of scheduling.
template <class Fn>
void parallel_blocks(std::size_t count, unsigned workers, Fn&& fn) {
  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
  const std::size_t step = (count + blocks - 1) / std::max<std::size_t>(blocks, 1);
  if (blocks == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t begin = std::min(count, b * step);
    const std::size_t end = std::min(count, begin + step);
    pool.emplace_back([&fn, b, begin, end] { fn(b, begin, end); });
  }
}

}  // namespace mincode

#pragma once

#include "dioph/error.hpp"
#include "dioph/integral_search.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <thread>
#include <vector>

namespace dioph::detail {

inline std::uint64_t clamp_steps(std::uint64_t total, const SearchOptions& options, bool& truncated) {
  if (options.step_budget && *options.step_budget < total) {
    truncated = true;
    return *options.step_budget;
  }
  truncated = false;
  return total;
}

/// Runs work(begin, end, out) over [0, n) split into contiguous chunks and
/// concatenates the outputs in chunk order.
template <class T, class Work>
std::vector<T> partitioned(std::uint64_t n, unsigned threads, Work work) {
  threads = std::max(1U, threads);
  if (threads == 1 || n < 2 * static_cast<std::uint64_t>(threads)) {
    std::vector<T> out;
    work(std::uint64_t{0}, n, out);
    return out;
  }
  std::vector<std::vector<T>> parts(threads);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(n, chunk * t);
      const std::uint64_t end = std::min(n, begin + chunk);
      pool.emplace_back([&, t, begin, end] { work(begin, end, parts[t]); });
    }
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

inline void check_bound(const Integer& bound) {
  if (bound < 0) throw PreconditionError("search bound must be nonnegative");
  if (bound > Integer(1) << 30) throw PreconditionError("search bound too large for exhaustive search");
}

}  // namespace dioph::detail

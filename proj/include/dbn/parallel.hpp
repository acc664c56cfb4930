#ifndef DBN_PARALLEL_HPP
#define DBN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dbn {

inline unsigned default_workers() noexcept {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs body(begin, end) over [0, count) in chunks of at most chunk indices,
/// claimed from a shared counter by `workers` threads. The first exception
/// thrown by any chunk is rethrown on the calling thread.
template <class Body>
void parallel_for_chunks(std::uint64_t count, unsigned workers, std::uint64_t chunk, Body body) {
  if (count == 0) return;
  chunk = std::max<std::uint64_t>(chunk, 1);
  workers = std::max(1U, workers);
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  if (workers == 1 || chunks == 1) {
    for (std::uint64_t b = 0; b < count; b += chunk) body(b, std::min(count, b + chunk));
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (std::uint64_t i = next++; i < chunks; i = next++) {
        const std::uint64_t b = i * chunk;
        body(b, std::min(count, b + chunk));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = chunks;
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(run);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace dbn

#endif  // DBN_PARALLEL_HPP

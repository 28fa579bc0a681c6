#ifndef ODDCRIT_SAMPLING_HPP
#define ODDCRIT_SAMPLING_HPP

// Seeded graph samplers and a deterministic parallel-for.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit {

/// std::mt19937_64 is fully specified by the standard; the helpers below avoid
/// the implementation-defined std distributions so samples are reproducible
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Per-stream seed for item `index` of a run seeded with `seed` (splitmix64).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }
  /// Uniform in [lo, hi], rejection-sampled.
  long long between(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return lo + static_cast<long long>(r % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Erdos-Renyi G(n, p).
inline Graph erdos_renyi(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// A random recursive spanning tree (vertex i attaches to a uniform earlier
/// vertex) plus every other pair independently with probability p. Always
/// connected.
inline Graph random_connected(int n, double p, Rng& rng) {
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    auto u = static_cast<Vertex>(rng.between(0, v - 1));
    present[u][v] = 1;
    edges.emplace_back(u, v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!present[u][v] && rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// processed exactly once; results must be written to per-index slots. The
/// first exception thrown by any body is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace oddcrit

#endif  // ODDCRIT_SAMPLING_HPP

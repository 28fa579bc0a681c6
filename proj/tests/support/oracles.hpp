#ifndef ODDCRIT_TESTS_ORACLES_HPP
#define ODDCRIT_TESTS_ORACLES_HPP

// Test-only reference computations, written independently of the library's
// algorithms.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit::testing {

/// Floyd-Warshall hop counts; -1 for unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Smallest |S| whose removal leaves a disconnected graph (n - 1 if none).
inline int connectivity_by_subsets(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best || size > n - 2) continue;
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) members.push_back(v);
    auto [rest, kept] = g.without(VertexSet(members));
    if (!rest.is_connected()) best = size;
  }
  return best;
}

/// det(M) by cofactor expansion, exact.
inline long long det3(const std::array<std::array<long long, 3>, 3>& m) {
  long long total = 0;
  for (int j = 0; j < 3; ++j) {
    const int a = (j + 1) % 3, b = (j + 2) % 3;
    total += m[0][j] * (m[1][a] * m[2][b] - m[1][b] * m[2][a]);
  }
  return total;
}

/// Coefficients [1, c2, c1, c0] of det(xI - M), recovered by evaluating the
/// determinant at x = 0, 1, 2, 3 and solving for the monic cubic by
/// Newton forward differences.
template <class Matrix>
std::array<long long, 4> char_poly_by_interpolation(const Matrix& m) {
  std::array<long long, 4> y{};
  for (int x = 0; x < 4; ++x) {
    std::array<std::array<long long, 3>, 3> a{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a[i][j] = (i == j ? x : 0) - static_cast<long long>(m[i][j]);
    y[x] = det3(a);
  }
  // p(x) = x^3 + c2 x^2 + c1 x + c0. Subtract x^3 and fit the quadratic.
  for (int x = 0; x < 4; ++x) y[x] -= static_cast<long long>(x) * x * x;
  const long long c0 = y[0];
  const long long d1 = y[1] - y[0], d2 = y[2] - y[1];
  const long long c2 = (d2 - d1) / 2;
  const long long c1 = d1 - c2;
  if (y[3] != 9 * c2 + 3 * c1 + c0) throw std::logic_error("interpolated polynomial is not cubic");
  return {1, c2, c1, c0};
}

/// Every graph on n vertices up to isomorphism, as canonical edge lists. Built by
/// extending each graph on n - 1 vertices with every neighbourhood of a new
/// vertex and keeping the lexicographically smallest adjacency bitstring over all
/// relabelings.
inline std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
  auto canonical = [](int order, const std::vector<std::uint32_t>& adj) {
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) code = code << 1 | ((adj[perm[i]] >> perm[j]) & 1u);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  auto decode = [](int order, std::uint64_t code) {
    std::vector<Edge> edges;
    int bits = order * (order - 1) / 2;
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j) {
        --bits;
        if (code >> bits & 1u) edges.emplace_back(i, j);
      }
    return Graph(order, edges);
  };

  std::set<std::uint64_t> level{0};  // the single graph on one vertex
  for (int order = 2; order <= n; ++order) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = decode(order - 1, code);
      std::vector<std::uint32_t> adj(order, 0);
      for (auto [u, v] : base.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
      for (std::uint32_t nb = 0; nb < (1u << (order - 1)); ++nb) {
        auto ext = adj;
        ext[order - 1] = nb;
        for (int v = 0; v < order - 1; ++v)
          if (nb >> v & 1u) ext[v] |= 1u << (order - 1);
        next.insert(canonical(order, ext));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) out.push_back(decode(n, code));
  return out;
}

}  // namespace oddcrit::testing

#endif  // ODDCRIT_TESTS_ORACLES_HPP

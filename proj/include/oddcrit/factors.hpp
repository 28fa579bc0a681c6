#ifndef ODDCRIT_FACTORS_HPP
#define ODDCRIT_FACTORS_HPP

// (1,f)-odd factors: existence and k-criticality decided by enumerating vertex
// subsets against the odd-component criterion, plus a definitional checker and
// an edge-subset brute-force oracle.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit {

/// Per-vertex odd upper bound f(v) >= 1.
class OddBoundFunction {
 public:
  explicit OddBoundFunction(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
      if (v < 1 || v % 2 == 0) throw ValidationError("odd bound values must be odd and >= 1, got " + std::to_string(v));
  }
  static OddBoundFunction constant(int order, int b) {
    return OddBoundFunction(std::vector<int>(static_cast<std::size_t>(order), b));
  }

  int operator()(Vertex v) const { return values_.at(v); }
  bool is_constant() const {
    return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
  }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<int>& values() const noexcept { return values_; }

  /// f restricted to `kept` (new label i carries the value of kept[i]).
  OddBoundFunction restricted(const std::vector<Vertex>& kept) const {
    std::vector<int> out;
    out.reserve(kept.size());
    for (Vertex v : kept) out.push_back(values_.at(v));
    return OddBoundFunction(std::move(out));
  }

 private:
  std::vector<int> values_;
};

/// Outcome of a subset-criterion check. On failure `witness` holds a
/// minimum-size S with q = o(G - S) > bound.
struct CriticalityWitness {
  bool verdict = true;
  std::optional<VertexSet> witness;
  int q = 0;
  long long bound = 0;
};

struct EnumerationLimits {
  int max_order = 22;               ///< subset criteria; at most 63
  int max_definitional_order = 16;  ///< deletion-by-deletion checker
  int max_edges = 24;               ///< edge-subset oracle
};

namespace detail {

/// Odd components of G - removed with bitmask adjacency.
inline int odd_components_mask(const std::vector<std::uint64_t>& adj, std::uint64_t all, std::uint64_t removed) {
  std::uint64_t remaining = all & ~removed;
  int odd = 0;
  while (remaining) {
    std::uint64_t comp = remaining & (~remaining + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= remaining & ~comp;
      comp |= next;
      frontier = next;
    }
    remaining &= ~comp;
    odd += std::popcount(comp) & 1;
  }
  return odd;
}

/// Walk every subset with at least `min_size` members in increasing size,
/// increasing mask order within a size. `bound_of(mask)` gives the right-hand
/// side; returns the first violating subset.
inline CriticalityWitness enumerate_criterion(const Graph& g, int min_size,
                                              const std::function<long long(std::uint64_t, int)>& bound_of) {
  const int n = g.order();
  const auto adj = g.adjacency_masks();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int size = min_size; size <= n; ++size) {
    std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    while (true) {
      const long long bound = bound_of(mask, size);
      // o(G - S) cannot exceed n - |S|.
      if (n - size > bound) {
        const int q = odd_components_mask(adj, all, mask);
        if (q > bound) return {false, VertexSet::from_mask(mask), q, bound};
      }
      if (size == 0 || size == n) break;
      // Gosper: next mask with the same popcount.
      const std::uint64_t low = mask & (~mask + 1), ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
      if (mask & ~all) break;
    }
  }
  return {};
}

inline void check_f(const Graph& g, const OddBoundFunction& f) {
  if (f.size() != static_cast<std::size_t>(g.order())) throw ValidationError("bound function size does not match graph order");
}

inline long long sum_f(const OddBoundFunction& f, std::uint64_t mask) {
  long long total = 0;
  for (; mask; mask &= mask - 1) total += f(std::countr_zero(mask));
  return total;
}

/// Sum of the k largest f-values in S.
inline long long top_k_f(const OddBoundFunction& f, std::uint64_t mask, int k) {
  std::vector<int> vals;
  for (; mask; mask &= mask - 1) vals.push_back(f(std::countr_zero(mask)));
  std::partial_sort(vals.begin(), vals.begin() + k, vals.end(), std::greater<>());
  long long total = 0;
  for (int i = 0; i < k; ++i) total += vals[i];
  return total;
}

}  // namespace detail

/// Existence of a (1,f)-odd factor: o(G - S) <= sum_{v in S} f(v) for every S,
/// including S empty.
inline CriticalityWitness has_odd_factor(const Graph& g, const OddBoundFunction& f,
                                         const EnumerationLimits& limits = {}) {
  if (g.order() < 1) throw ValidationError("graph must be nonempty");
  if (g.order() > limits.max_order || g.order() > 63)
    throw ValidationError("order " + std::to_string(g.order()) + " exceeds enumeration cap " +
                          std::to_string(limits.max_order));
  detail::check_f(g, f);
  return detail::enumerate_criterion(g, 0, [&f](std::uint64_t s, int) { return detail::sum_f(f, s); });
}

/// k-criticality: for every S with |S| >= k,
/// o(G - S) <= sum_{v in S} f(v) - (sum of the k largest f-values in S).
inline CriticalityWitness is_k_critical(const Graph& g, const OddBoundFunction& f, int k,
                                        const EnumerationLimits& limits = {}) {
  if (k < 1) throw ValidationError("k must be at least 1");
  if (g.order() < k + 2) throw ValidationError("order must be at least k + 2");
  if (g.order() > limits.max_order || g.order() > 63)
    throw ValidationError("order " + std::to_string(g.order()) + " exceeds enumeration cap " +
                          std::to_string(limits.max_order));
  detail::check_f(g, f);
  if (f.is_constant()) {
    const long long b = f(0);
    return detail::enumerate_criterion(g, k, [b, k](std::uint64_t, int size) { return b * size - b * k; });
  }
  return detail::enumerate_criterion(
      g, k, [&f, k](std::uint64_t s, int) { return detail::sum_f(f, s) - detail::top_k_f(f, s, k); });
}

/// k-criticality straight from the definition: G - X has a (1,f)-odd factor
/// for every X with |X| = k.
inline bool is_k_critical_definitional(const Graph& g, const OddBoundFunction& f, int k,
                                       const EnumerationLimits& limits = {}) {
  if (k < 1) throw ValidationError("k must be at least 1");
  const int n = g.order();
  if (n < k + 2) throw ValidationError("order must be at least k + 2");
  if (n > limits.max_definitional_order || n > 63)
    throw ValidationError("order " + std::to_string(n) + " exceeds definitional cap " +
                          std::to_string(limits.max_definitional_order));
  detail::check_f(g, f);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; !(x & ~all);) {
    auto [rest, kept] = g.without(VertexSet::from_mask(x));
    if (!has_odd_factor(rest, f.restricted(kept), limits).verdict) return false;
    const std::uint64_t low = x & (~x + 1), ripple = x + low;
    x = (((ripple ^ x) >> 2) / low) | ripple;
  }
  return true;
}

/// Edge subsets in increasing mask order (bit i selects edge i of g.edges());
/// returns the first whose degrees are all odd and within [1, f(v)].
inline std::optional<std::vector<Edge>> find_odd_factor_bruteforce(const Graph& g, const OddBoundFunction& f,
                                                                   const EnumerationLimits& limits = {}) {
  detail::check_f(g, f);
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > limits.max_edges)
    throw ValidationError("edge count " + std::to_string(m) + " exceeds oracle cap " + std::to_string(limits.max_edges));
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::uint64_t b = mask; b; b &= b - 1) {
      const auto& e = edges[std::countr_zero(b)];
      ++deg[e.first];
      ++deg[e.second];
    }
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = deg[v] % 2 == 1 && deg[v] <= f(v);
    if (!ok) continue;
    std::vector<Edge> factor;
    for (std::uint64_t b = mask; b; b &= b - 1) factor.push_back(edges[std::countr_zero(b)]);
    return factor;
  }
  return std::nullopt;
}

}  // namespace oddcrit

#endif  // ODDCRIT_FACTORS_HPP

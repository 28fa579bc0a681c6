#ifndef ODDCRIT_GRAPH_HPP
#define ODDCRIT_GRAPH_HPP

// Simple undirected graphs, the join/union constructions used by the extremal
// families, odd-component counting and vertex connectivity.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddcrit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for invalid arguments and violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the edge-list reader; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A subset of 0..n-1, kept as a sorted duplicate-free list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw ValidationError("vertex set contains duplicates");
  }

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
      if (mask & 1u) s.members_.push_back(v);
    return s;
  }
  static VertexSet range(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v < last; ++v) s.members_.push_back(v);
    return s;
  }

  /// Only valid when every member is below 64.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (Vertex v : members_) {
      if (v < 0 || v >= 64) throw ValidationError("vertex set does not fit a 64-bit mask");
      m |= std::uint64_t{1} << v;
    }
    return m;
  }

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  Graph() = default;

  /// Throws ValidationError on loops, duplicates or out-of-range endpoints.
  Graph(int order, std::span<const Edge> edges) : adj_(checked_order(order)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order)
        throw ValidationError("edge endpoint out of range");
      if (u == v) throw ValidationError("self-loop");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw ValidationError("duplicate edge");
    }
    size_ = edges.size();
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return size_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Neighborhood bitmasks; requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (order() > 64) throw ValidationError("graph too large for bitmask adjacency");
    std::vector<std::uint64_t> masks(adj_.size(), 0);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u]) masks[u] |= std::uint64_t{1} << v;
    return masks;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    auto e = edges();
    e.emplace_back(u, v);
    return Graph(order(), e);
  }

  /// Induced subgraph on V \ removed, relabeled densely in increasing order.
  /// The returned map sends new labels to original ones.
  std::pair<Graph, std::vector<Vertex>> without(const VertexSet& removed) const {
    std::vector<Vertex> relabel(adj_.size(), -1), original;
    for (Vertex v = 0; v < order(); ++v) {
      if (removed.contains(v)) continue;
      relabel[v] = static_cast<Vertex>(original.size());
      original.push_back(v);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : edges())
      if (relabel[u] >= 0 && relabel[v] >= 0) kept.emplace_back(relabel[u], relabel[v]);
    return {Graph(static_cast<int>(original.size()), kept), std::move(original)};
  }

  bool is_connected() const {
    if (adj_.empty()) return false;
    return component_labels(VertexSet{}).second == 1;
  }

  /// Component id per vertex of G - removed (removed vertices get -1) and the
  /// component count. Breadth-first over the complement of removed.
  std::pair<std::vector<int>, int> component_labels(const VertexSet& removed) const {
    std::vector<int> label(adj_.size(), -1);
    for (Vertex v : removed) {
      if (v < 0 || v >= order()) throw ValidationError("vertex set member out of range");
      label[v] = -2;
    }
    int count = 0;
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < order(); ++root) {
      if (label[root] != -1) continue;
      label[root] = count;
      queue.push_back(root);
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : adj_[u])
          if (label[w] == -1) {
            label[w] = count;
            queue.push_back(w);
          }
      }
      ++count;
    }
    for (auto& l : label)
      if (l == -2) l = -1;
    return {std::move(label), count};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t checked_order(int order) {
    if (order < 0) throw ValidationError("negative order");
    return static_cast<std::size_t>(order);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t size_ = 0;
};

/// K_s joined with the disjoint union of cliques K_{parts[0]}, K_{parts[1]}, ...
struct FamilySpec {
  int s = 1;
  std::vector<int> parts;

  int order() const { return s + std::accumulate(parts.begin(), parts.end(), 0); }
};

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" then m lines "u v".

namespace detail {

inline bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos || sp == 0 || sp + 1 >= line.size()) return false;
  auto field = [](std::string_view f, long long& out) {
    if (f.empty() || f.front() == '-' || f.front() == '+') return false;
    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
    return ec == std::errc{} && p == f.data() + f.size();
  };
  return field(line.substr(0, sp), a) && field(line.substr(sp + 1), b);
}

}  // namespace detail

inline Graph from_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

  long long n = 0, m = 0;
  if (!detail::parse_pair(lines[0], n, m)) throw ParseError(1, "malformed header, expected \"n m\"");
  if (n > std::numeric_limits<int>::max() / 2) throw ParseError(1, "order too large");

  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(lineno, "edge count mismatch: more than " + std::to_string(m) + " edges");
    long long u = 0, v = 0;
    if (!detail::parse_pair(lines[i], u, v)) throw ParseError(lineno, "malformed edge line");
    if (u >= n || v >= n) throw ParseError(lineno, "vertex index out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    auto a = static_cast<Vertex>(std::min(u, v)), b = static_cast<Vertex>(std::max(u, v));
    auto& row = seen[a];
    if (std::find(row.begin(), row.end(), b) != row.end())
      throw ParseError(lineno, "duplicate edge");
    row.push_back(b);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lines.size() + 1, "edge count mismatch: expected " + std::to_string(m) +
                                           " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

/// Canonical writer: header, then "u v" with u < v in sorted order, LF-terminated.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Constructions.

inline Graph complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), e);
}

inline Graph join(const Graph& a, const Graph& b) {
  auto e = disjoint_union(a, b).edges();
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) e.emplace_back(u, a.order() + v);
  return Graph(a.order() + b.order(), e);
}

/// Labels: join clique 0..s-1, then each part in the given order.
inline Graph build_family(const FamilySpec& spec) {
  if (spec.s < 1) throw ValidationError("family needs s >= 1");
  if (spec.parts.empty()) throw ValidationError("family needs at least one part");
  if (std::any_of(spec.parts.begin(), spec.parts.end(), [](int p) { return p < 1; }))
    throw ValidationError("every family part must have order >= 1");
  Graph rest = complete(spec.parts.front());
  for (std::size_t i = 1; i < spec.parts.size(); ++i) rest = disjoint_union(rest, complete(spec.parts[i]));
  return join(complete(spec.s), rest);
}

/// Block boundaries of build_family(spec) in its labeling: join clique, then parts.
inline std::vector<VertexSet> family_blocks(const FamilySpec& spec) {
  std::vector<VertexSet> blocks{VertexSet::range(0, spec.s)};
  Vertex at = spec.s;
  for (int p : spec.parts) {
    blocks.push_back(VertexSet::range(at, at + p));
    at += p;
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Odd components and connectivity.

inline int odd_components(const Graph& g, const VertexSet& removed) {
  auto [label, count] = g.component_labels(removed);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (int l : label)
    if (l >= 0) ++sizes[l];
  return static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](int c) { return c % 2 == 1; }));
}

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths; s and t nonadjacent.
/// Unit-capacity flow on the split graph (v_in = 2v, v_out = 2v+1).
inline int max_disjoint_paths(const Graph& g, Vertex s, Vertex t, int stop_at) {
  const int n = g.order();
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(2 * static_cast<std::size_t>(n));
  auto add = [&](int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n;
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<int> via(out.size());
  while (flow < stop_at) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int x = queue.front();
      queue.pop_front();
      for (int id : out[x])
        if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      int id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Vertex connectivity by Menger: minimum over nonadjacent pairs of the
/// number of internally disjoint paths. K_n gives n-1; disconnected gives 0.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ValidationError("vertex connectivity needs at least 2 vertices");
  if (!g.is_connected()) return 0;
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) best = std::min(best, detail::max_disjoint_paths(g, u, v, best));
  return best;
}

}  // namespace oddcrit

#endif  // ODDCRIT_GRAPH_HPP

#ifndef ODDCRIT_QUOTIENT_HPP
#define ODDCRIT_QUOTIENT_HPP

// Quotient matrices of distance matrices over vertex partitions, the closed-form
// characteristic polynomials of the split-join and extremal families, and
// largest-root extraction.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "oddcrit/graph.hpp"
#include "oddcrit/params.hpp"
#include "oddcrit/spectrum.hpp"

namespace oddcrit {

// ---------------------------------------------------------------------------
// Partitions and quotient matrices.

/// Ordered list of disjoint nonempty blocks covering 0..n-1.
class VertexPartition {
 public:
  VertexPartition(int order, std::vector<VertexSet> blocks) : order_(order), blocks_(std::move(blocks)) {
    std::vector<char> seen(static_cast<std::size_t>(std::max(order, 0)), 0);
    std::size_t covered = 0;
    for (const auto& block : blocks_) {
      if (block.empty()) throw ValidationError("partition block is empty");
      for (Vertex v : block) {
        if (v < 0 || v >= order) throw ValidationError("partition member " + std::to_string(v) + " out of range");
        if (seen[v]) throw ValidationError("vertex " + std::to_string(v) + " appears in two blocks");
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != static_cast<std::size_t>(order)) throw ValidationError("partition does not cover every vertex");
  }

  /// Consecutive label ranges of the given sizes.
  static VertexPartition from_sizes(int order, const std::vector<int>& sizes) {
    std::vector<VertexSet> blocks;
    Vertex at = 0;
    for (int sz : sizes) {
      if (sz < 1) throw ValidationError("block sizes must be positive");
      blocks.push_back(VertexSet::range(at, at + sz));
      at += sz;
    }
    return VertexPartition(order, std::move(blocks));
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const VertexSet& operator[](std::size_t i) const { return blocks_.at(i); }
  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }

 private:
  int order_;
  std::vector<VertexSet> blocks_;
};

/// Join clique, first part, and all remaining parts merged: the three-block
/// partition used for the extremal and split-join families.
inline VertexPartition three_block_partition(const FamilySpec& spec) {
  if (spec.parts.size() < 2) throw ValidationError("three-block partition needs at least two parts");
  const int big = spec.parts.front();
  return VertexPartition::from_sizes(spec.order(), {spec.s, big, spec.order() - spec.s - big});
}

using IntMatrix3 = std::array<std::array<std::int64_t, 3>, 3>;

struct QuotientMatrix {
  std::size_t rank = 0;
  /// Row-major b_ij: average over rows of block i of their sums over block j.
  std::vector<double> entries;
  /// Row sums over block j summed over the rows of block i (exact).
  std::vector<std::int64_t> block_totals;
  std::vector<std::int64_t> block_sizes;
  bool equitable = false;

  double operator()(std::size_t i, std::size_t j) const { return entries.at(i * rank + j); }

  /// Exact entries; only meaningful for equitable partitions.
  std::int64_t exact(std::size_t i, std::size_t j) const {
    if (!equitable) throw ValidationError("exact quotient entries require an equitable partition");
    return block_totals.at(i * rank + j) / block_sizes.at(i);
  }
  IntMatrix3 exact3() const {
    if (rank != 3) throw ValidationError("quotient matrix is not 3x3");
    IntMatrix3 m{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = exact(i, j);
    return m;
  }
};

inline QuotientMatrix quotient_matrix(const DistanceMatrix& d, const VertexPartition& pi) {
  if (pi.order() != d.order()) throw ValidationError("partition order does not match matrix order");
  QuotientMatrix q;
  q.rank = pi.size();
  q.entries.assign(q.rank * q.rank, 0.0);
  q.block_totals.assign(q.rank * q.rank, 0);
  q.equitable = true;
  for (std::size_t i = 0; i < q.rank; ++i) {
    q.block_sizes.push_back(static_cast<std::int64_t>(pi[i].size()));
    for (std::size_t j = 0; j < q.rank; ++j) {
      std::int64_t total = 0, first = -1;
      for (Vertex u : pi[i]) {
        std::int64_t row = 0;
        for (Vertex v : pi[j]) row += d(u, v);
        if (first < 0) first = row;
        if (row != first) q.equitable = false;
        total += row;
      }
      q.block_totals[i * q.rank + j] = total;
      q.entries[i * q.rank + j] = static_cast<double>(total) / static_cast<double>(pi[i].size());
    }
  }
  return q;
}

/// Largest eigenvalue of a nonnegative quotient matrix, by power iteration on Q + I.
inline double quotient_largest_eigenvalue(const QuotientMatrix& q, double tol = kDefaultTolerance,
                                          int cap = kDefaultIterationCap) {
  for (double v : q.entries)
    if (v < 0) throw ValidationError("quotient matrix has a negative entry");
  const std::size_t r = q.rank;
  auto apply = [&q, r](std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < r; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < r; ++j) acc += q.entries[i * r + j] * x[j];
      y[i] = acc;
    }
  };
  return detail::shifted_power_iteration(static_cast<int>(r), apply, tol, cap).value;
}

// ---------------------------------------------------------------------------
// Exact integer polynomials.

namespace detail {

using Wide = __int128;

inline std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ValidationError("integer coefficient overflow");
  return static_cast<std::int64_t>(v);
}

inline constexpr long long kParamLimit = 1'000'000;

inline void check_magnitude(const OddFactorParams& p, long long s) {
  for (long long v : {p.b, p.k, p.n, s})
    if (v > kParamLimit || v < -kParamLimit) throw ValidationError("parameter magnitude exceeds 10^6");
}

}  // namespace detail

/// c[0] x^3 + c[1] x^2 + c[2] x + c[3].
struct Cubic {
  std::array<std::int64_t, 4> c{};

  long double operator()(long double x) const { return ((c[0] * x + c[1]) * x + c[2]) * x + c[3]; }
  std::int64_t exact(std::int64_t x) const {
    detail::Wide acc = c[0];
    for (int i = 1; i < 4; ++i) acc = acc * x + c[i];
    return detail::narrow(acc);
  }
  friend bool operator==(const Cubic&, const Cubic&) = default;
};

/// a[0] x^2 + a[1] x + a[2].
struct Quadratic {
  std::array<std::int64_t, 3> a{};

  long double operator()(long double x) const { return (a[0] * x + a[1]) * x + a[2]; }
  std::int64_t exact(std::int64_t x) const {
    detail::Wide acc = a[0];
    for (int i = 1; i < 3; ++i) acc = acc * x + a[i];
    return detail::narrow(acc);
  }
  /// x-coordinate of the vertex as numerator / denominator: -a1 / (2 a2).
  std::pair<std::int64_t, std::int64_t> symmetry_axis() const { return {-a[1], 2 * a[0]}; }
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

inline Cubic operator-(const Cubic& lhs, const Cubic& rhs) {
  Cubic out;
  for (int i = 0; i < 4; ++i) out.c[i] = detail::narrow(detail::Wide{lhs.c[i]} - rhs.c[i]);
  return out;
}

/// factor * q, as a cubic with zero leading coefficient.
inline Cubic scaled(std::int64_t factor, const Quadratic& q) {
  Cubic out;
  for (int i = 0; i < 3; ++i) out.c[i + 1] = detail::narrow(detail::Wide{factor} * q.a[i]);
  return out;
}

/// det(xI - M) for a 3x3 integer matrix, by trace, principal minors and determinant.
inline Cubic characteristic_polynomial(const IntMatrix3& m) {
  using detail::Wide;
  Wide trace = Wide{m[0][0]} + m[1][1] + m[2][2];
  auto minor = [&m](int i, int j) { return Wide{m[i][i]} * m[j][j] - Wide{m[i][j]} * m[j][i]; };
  Wide minors = minor(0, 1) + minor(0, 2) + minor(1, 2);
  Wide det = Wide{m[0][0]} * (Wide{m[1][1]} * m[2][2] - Wide{m[1][2]} * m[2][1]) -
             Wide{m[0][1]} * (Wide{m[1][0]} * m[2][2] - Wide{m[1][2]} * m[2][0]) +
             Wide{m[0][2]} * (Wide{m[1][0]} * m[2][1] - Wide{m[1][1]} * m[2][0]);
  return Cubic{{1, detail::narrow(-trace), detail::narrow(minors), detail::narrow(-det)}};
}

inline void validate_split(const OddFactorParams& p, long long s) {
  p.validate_basic();
  detail::check_magnitude(p, s);
  if (s < p.k + 1) throw ValidationError("s must be at least k+1, got " + std::to_string(s));
  if (p.n < (p.b + 1) * s - p.b * p.k + 2)
    throw ValidationError("n must be at least (b+1)s - bk + 2 = " + std::to_string((p.b + 1) * s - p.b * p.k + 2));
}

/// Block formula for the quotient of D(K_s v (K_{n-(b+1)s+bk-1} u (bs-bk+1)K_1)).
inline IntMatrix3 split_join_quotient(const OddFactorParams& p, long long s) {
  validate_split(p, s);
  const long long b = p.b, k = p.k, n = p.n;
  const long long big = n - (b + 1) * s + b * k - 1, singles = b * s - b * k + 1;
  return {{{s - 1, big, singles}, {s, big - 1, 2 * singles}, {s, 2 * big, 2 * singles - 2}}};
}

/// Block formula for the quotient of D(K_{k+1} v (K_{n-k-b-2} u (b+1)K_1)).
inline IntMatrix3 extremal_quotient(const OddFactorParams& p) {
  p.validate_extremal();
  detail::check_magnitude(p, 0);
  const long long b = p.b, k = p.k, n = p.n;
  return {{{k, n - k - b - 2, b + 1}, {k + 1, n - k - b - 3, 2 * b + 2}, {k + 1, 2 * n - 2 * k - 2 * b - 4, 2 * b}}};
}

/// Closed-form characteristic polynomial of the split-join quotient.
inline Cubic char_poly_B(const OddFactorParams& p, long long s_) {
  validate_split(p, s_);
  using detail::Wide;
  const Wide b = p.b, k = p.k, n = p.n, s = s_;
  const Wide c2 = -(n + b * s - b * k - 3);
  const Wide c1 = (2 * b * k - 2 * b * s - 5) * n + (2 * b * b + 3 * b) * s * s -
                  (4 * b * b * k + 3 * b * k - 3 * b - 3) * s + 2 * b * b * k * k - 3 * b * k + 6;
  const Wide c0 = -(b * b + b) * s * s * s + (b * n + 2 * b * b * k + b * k + 2 * b * b + b - 1) * s * s +
                  ((1 - 2 * b - b * k) * n - b * b * k * k - 4 * b * b * k - b * k + 4 * b + 2) * s +
                  (2 * b * k - 4) * n + 2 * b * b * k * k - 4 * b * k + 4;
  return Cubic{{1, detail::narrow(c2), detail::narrow(c1), detail::narrow(c0)}};
}

/// Closed-form characteristic polynomial of the extremal quotient.
inline Cubic char_poly_Bstar(const OddFactorParams& p) {
  p.validate_extremal();
  detail::check_magnitude(p, 0);
  using detail::Wide;
  const Wide b = p.b, k = p.k, n = p.n;
  const Wide c2 = -(n + b - 3);
  const Wide c1 = -(2 * b + 5) * n + 2 * b * b + 3 * b * k + 6 * b + 3 * k + 9;
  const Wide c0 = (b * k + k - b - 3) * n - b * b * k + b * b - b * k * k - b * k + 4 * b - k * k + 5;
  return Cubic{{1, detail::narrow(c2), detail::narrow(c1), detail::narrow(c0)}};
}

/// The quadratic g with char_poly_B - char_poly_Bstar = (s - k - 1) g.
inline Quadratic g_poly(const OddFactorParams& p, long long s_) {
  validate_split(p, s_);
  using detail::Wide;
  const Wide b = p.b, k = p.k, n = p.n, s = s_;
  const Wide a1 = -2 * b * n + (2 * b * b + 3 * b) * s - 2 * b * b * k + 2 * b * b + 6 * b + 3;
  const Wide a0 = -(b * b + b) * s * s + (b * n + b * b * k + b * b - 1) * s + (1 - b) * n - 2 * b * b * k - b * k +
                  b * b + 4 * b - k + 1;
  return Quadratic{{detail::narrow(-b), detail::narrow(a1), detail::narrow(a0)}};
}

inline constexpr int kBisectionCap = 200;

/// Largest real root of a monic cubic, by bisection inside the Cauchy bound.
inline double largest_root(const Cubic& cubic) {
  if (cubic.c[0] != 1) throw ValidationError("largest_root expects a monic cubic");
  using Real = long double;
  const Real c2 = cubic.c[1], c1 = cubic.c[2];
  const Real bound = 1 + std::max({std::abs(c2), std::abs(c1), std::abs(static_cast<Real>(cubic.c[3]))});

  auto bisect = [&cubic](Real lo, Real hi) {
    // cubic(lo) <= 0 < cubic(hi)
    for (int i = 0; i < kBisectionCap; ++i) {
      const Real mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      (cubic(mid) > 0 ? hi : lo) = mid;
    }
    return static_cast<double>(lo + (hi - lo) / 2);
  };

  // Critical points solve 3x^2 + 2 c2 x + c1 = 0.
  const Real disc = c2 * c2 - 3 * c1;
  if (disc <= 0) return bisect(-bound, bound);
  const Real root_disc = std::sqrt(disc);
  const Real left = (-c2 - root_disc) / 3, right = (-c2 + root_disc) / 3;
  const Real at_min = cubic(right);
  if (at_min == 0) return static_cast<double>(right);
  if (at_min < 0) return bisect(right, bound);
  // Local minimum above the axis: the only real root lies left of the local maximum.
  return bisect(-bound, left);
}

}  // namespace oddcrit

#endif  // ODDCRIT_QUOTIENT_HPP

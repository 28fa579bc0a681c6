#ifndef ODDCRIT_SPECTRUM_HPP
#define ODDCRIT_SPECTRUM_HPP

// Distance matrices, the Wiener index and the distance spectral radius.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit {

class DisconnectedError : public ValidationError {
 public:
  DisconnectedError(Vertex u, Vertex v)
      : ValidationError("graph is disconnected: no path between " + std::to_string(u) + " and " +
                        std::to_string(v)),
        pair_(u, v) {}
  Edge pair() const noexcept { return pair_; }

 private:
  Edge pair_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense symmetric matrix of hop counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  int order() const noexcept { return n_; }
  int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const int> row(int i) const {
    return std::span<const int>(d_).subspan(static_cast<std::size_t>(i) * n_, n_);
  }
  long long row_sum(int i) const {
    auto r = row(i);
    return std::accumulate(r.begin(), r.end(), 0LL);
  }
  int diameter() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

  /// y = D x
  void multiply(std::span<const double> x, std::span<double> y) const {
    for (int i = 0; i < n_; ++i) {
      const int* r = d_.data() + static_cast<std::size_t>(i) * n_;
      double acc = 0.0;
      for (int j = 0; j < n_; ++j) acc += r[j] * x[j];
      y[i] = acc;
    }
  }

  friend DistanceMatrix distance_matrix(const Graph& g);

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// All-pairs BFS hop counts. Throws DisconnectedError naming an unreachable pair.
inline DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm;
  const int n = g.order();
  if (n < 1) throw ValidationError("distance matrix of the empty graph");
  dm.n_ = n;
  dm.d_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex src = 0; src < n; ++src) {
    int* dist = dm.d_.data() + static_cast<std::size_t>(src) * n;
    std::size_t head = 0, tail = 0;
    dist[src] = 0;
    queue[tail++] = src;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
    }
    if (tail != static_cast<std::size_t>(n)) {
      auto missing = std::find(dist, dist + n, -1) - dist;
      throw DisconnectedError(src, static_cast<Vertex>(missing));
    }
  }
  return dm;
}

/// Sum of d_ij over unordered pairs.
inline std::int64_t wiener_index(const DistanceMatrix& d) {
  std::int64_t total = 0;
  for (int i = 0; i < d.order(); ++i)
    for (int j = i + 1; j < d.order(); ++j) total += d(i, j);
  return total;
}

/// 2W/n in lowest terms; a lower bound on the distance spectral radius.
struct WienerBound {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

inline WienerBound wiener_bound(const DistanceMatrix& d) {
  std::int64_t num = 2 * wiener_index(d), den = d.order();
  std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

enum class SpectralMethod { power_iteration, dense };

inline const char* to_string(SpectralMethod m) {
  return m == SpectralMethod::power_iteration ? "power-iteration" : "dense";
}

struct SpectralEstimate {
  double value = 0.0;
  /// ||M x - value x||_inf / ||x||_inf at the returned vector.
  double residual = 0.0;
  int iterations = 0;
  SpectralMethod method = SpectralMethod::power_iteration;
  /// Perron vector, unit 2-norm, nonnegative.
  std::vector<double> vector;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultIterationCap = 200000;

namespace detail {

inline double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Power iteration on M + I from the all-ones vector. `apply(x, y)` must
/// compute y = M x for an entrywise nonnegative M. The estimate is the
/// Rayleigh quotient x.(M x) / x.x, checked against the residual each sweep.
template <class Apply>
SpectralEstimate shifted_power_iteration(int n, Apply&& apply, double tol, int cap) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  if (n < 1) throw ValidationError("empty matrix");
  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(x.size());
  SpectralEstimate est;
  for (int it = 1; it <= cap; ++it) {
    apply(std::span<const double>(x), std::span<double>(y));
    double xy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) xy += x[i] * y[i];
    // x has unit 2-norm, so xy is the Rayleigh quotient of M.
    double residual = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) residual = std::max(residual, std::abs(y[i] - xy * x[i]));
    residual /= inf_norm(x);
    est.value = xy;
    est.residual = residual;
    est.iterations = it;
    if (residual <= tol) {
      est.vector = std::move(x);
      return est;
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      y[i] += x[i];  // shift by the identity
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("power iteration did not reach residual " + std::to_string(tol) + " within " +
                         std::to_string(cap) + " iterations (last residual " + std::to_string(est.residual) +
                         ")");
}

/// Cyclic Jacobi eigensolver for a symmetric row-major matrix. Returns the
/// eigenvalues; `vectors` receives eigenvectors as columns.
inline std::vector<double> jacobi_eigen(std::vector<double> a, int n, std::vector<double>& vectors) {
  auto at = [n](std::vector<double>& m, int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };
  vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) at(vectors, i, i) = 1.0;

  double scale = 0.0;
  for (double v : a) scale += v * v;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(a, p, q) * at(a, p, q);
    if (off <= 1e-30 * scale || off == 0.0) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = at(a, r, p), arq = at(a, r, q);
          at(a, r, p) = c * arp - s * arq;
          at(a, r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = at(a, p, r), aqr = at(a, q, r);
          at(a, p, r) = c * apr - s * aqr;
          at(a, q, r) = s * apr + c * aqr;
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = at(vectors, r, p), vrq = at(vectors, r, q);
          at(vectors, r, p) = c * vrp - s * vrq;
          at(vectors, r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[i] = at(a, i, i);
  return eig;
}

}  // namespace detail

/// Largest eigenvalue of D by power iteration on D + I from the all-ones
/// vector. Throws ConvergenceError when the iteration cap is hit.
inline SpectralEstimate spectral_radius(const DistanceMatrix& d, double tol = kDefaultTolerance,
                                        int cap = kDefaultIterationCap) {
  auto est = detail::shifted_power_iteration(
      d.order(), [&d](std::span<const double> x, std::span<double> y) { d.multiply(x, y); }, tol, cap);
  est.method = SpectralMethod::power_iteration;
  return est;
}

inline constexpr int kDenseOrderCap = 512;

/// Full symmetric eigensolve (cyclic Jacobi); cross-check for spectral_radius.
inline SpectralEstimate spectral_radius_dense(const DistanceMatrix& d) {
  const int n = d.order();
  if (n > kDenseOrderCap) throw ValidationError("dense eigensolve limited to order " + std::to_string(kDenseOrderCap));
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = d(i, j);
  std::vector<double> vecs;
  auto eig = detail::jacobi_eigen(std::move(a), n, vecs);
  const int top = static_cast<int>(std::max_element(eig.begin(), eig.end()) - eig.begin());

  SpectralEstimate est;
  est.method = SpectralMethod::dense;
  est.value = eig[top];
  est.iterations = 1;
  est.vector.resize(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += est.vector[i] = vecs[static_cast<std::size_t>(i) * n + top];
  if (sum < 0)
    for (double& v : est.vector) v = -v;
  std::vector<double> dx(est.vector.size());
  d.multiply(est.vector, dx);
  double r = 0.0;
  for (int i = 0; i < n; ++i) r = std::max(r, std::abs(dx[i] - est.value * est.vector[i]));
  est.residual = r / detail::inf_norm(est.vector);
  return est;
}

}  // namespace oddcrit

#endif  // ODDCRIT_SPECTRUM_HPP

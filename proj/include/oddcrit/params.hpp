#ifndef ODDCRIT_PARAMS_HPP
#define ODDCRIT_PARAMS_HPP

#include <string>

#include "oddcrit/graph.hpp"

namespace oddcrit {

/// The (b, k, n) triple of the odd-factor criticality bound.
struct OddFactorParams {
  long long b = 1;  ///< odd upper degree bound
  long long k = 1;  ///< number of deleted vertices
  long long n = 0;  ///< order

  /// Smallest admissible b*n, i.e. the order bound n >= (b^2+2bk+5b+2k+4)/b scaled by b.
  long long scaled_order_bound() const { return b * b + 2 * b * k + 5 * b + 2 * k + 4; }
  bool meets_order_bound() const { return b * n >= scaled_order_bound(); }
  /// Order of the big clique in K_{k+1} v (K_{n-k-b-2} u (b+1)K_1).
  long long extremal_clique() const { return n - k - b - 2; }

  /// b odd positive, k positive, n = k (mod 2).
  void validate_basic() const {
    if (b < 1 || b % 2 == 0) throw ValidationError("b must be an odd positive integer, got " + std::to_string(b));
    if (k < 1) throw ValidationError("k must be positive, got " + std::to_string(k));
    if (n < 1) throw ValidationError("n must be positive, got " + std::to_string(n));
    if ((n - k) % 2 != 0) throw ValidationError("n and k must have the same parity");
  }
  void validate_extremal() const {
    validate_basic();
    if (extremal_clique() < 1) throw ValidationError("n - k - b - 2 must be at least 1");
  }
  /// All hypotheses on (b, k, n) of the criticality theorem.
  void validate_theorem() const {
    validate_extremal();
    if (!meets_order_bound())
      throw ValidationError("n must satisfy b*n >= b^2+2bk+5b+2k+4 (= " + std::to_string(scaled_order_bound()) + ")");
  }

  /// Largest admissible size of the deleted set in the split-join family,
  /// i.e. floor((n + bk - 2) / (b + 1)).
  long long max_split_size() const { return (n + b * k - 2) / (b + 1); }

  friend bool operator==(const OddFactorParams&, const OddFactorParams&) = default;
};

/// K_{k+1} v (K_{n-k-b-2} u (b+1)K_1).
inline FamilySpec extremal_spec(const OddFactorParams& p) {
  p.validate_extremal();
  FamilySpec spec{static_cast<int>(p.k + 1), {static_cast<int>(p.extremal_clique())}};
  spec.parts.insert(spec.parts.end(), static_cast<std::size_t>(p.b + 1), 1);
  return spec;
}

inline Graph extremal_graph(const OddFactorParams& p) { return build_family(extremal_spec(p)); }

/// K_s v (K_{n-(b+1)s+bk-1} u (bs-bk+1)K_1); needs s >= k+1 and n >= (b+1)s - bk + 2.
inline FamilySpec split_join_spec(const OddFactorParams& p, long long s) {
  p.validate_basic();
  if (s < p.k + 1) throw ValidationError("s must be at least k+1");
  if (p.n < (p.b + 1) * s - p.b * p.k + 2) throw ValidationError("n must be at least (b+1)s - bk + 2");
  FamilySpec spec{static_cast<int>(s), {static_cast<int>(p.n - (p.b + 1) * s + p.b * p.k - 1)}};
  spec.parts.insert(spec.parts.end(), static_cast<std::size_t>(p.b * s - p.b * p.k + 1), 1);
  return spec;
}

}  // namespace oddcrit

#endif  // ODDCRIT_PARAMS_HPP

#ifndef ODDCRIT_THEOREM_LAB_HPP
#define ODDCRIT_THEOREM_LAB_HPP

// Numerical reproduction of the distance-spectral criticality bound: the
// inequality chain comparing the split-join family against the extremal graph,
// the two spectral monotonicity lemmas, and seeded counterexample search.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "oddcrit/factors.hpp"
#include "oddcrit/graph.hpp"
#include "oddcrit/params.hpp"
#include "oddcrit/quotient.hpp"
#include "oddcrit/sampling.hpp"
#include "oddcrit/spectrum.hpp"

namespace oddcrit {

inline constexpr double kBoundSlack = 1e-9;        // theta >= n+b+1
inline constexpr double kChainGap = 1e-7;          // mu(split-join) - theta
inline constexpr double kQuotientAgreement = 1e-6; // closed-form root vs dense solve
inline constexpr double kIdentityTolerance = 1e-6; // f_B(theta) = (s-k-1) g(theta)
inline constexpr double kSpectralSlack = 1e-9;     // mu(G) <= theta admission
inline constexpr double kMonotoneGap = 1e-9;       // strict decrease on edge addition

// ---------------------------------------------------------------------------
// Proof chain.

struct ProofChainReport {
  OddFactorParams params;
  long long s = 0;

  double theta = 0.0;        ///< largest root of char_poly_Bstar
  double theta_dense = 0.0;  ///< dense solve on the extremal graph
  double mu_split = 0.0;     ///< largest root of char_poly_B
  double mu_split_dense = 0.0;

  WienerBound wiener;           ///< 2W/n of the extremal graph
  long long bound_target = 0;   ///< n + b + 1
  bool bound_check = false;     ///< theta >= n + b + 1 (slack kBoundSlack)
  bool wiener_check = false;    ///< 2W/n >= n + b + 1, exact

  std::int64_t g_at_bound = 0;  ///< g(n + b + 1), exact
  bool g_negative = false;
  std::int64_t axis_numerator = 0;  ///< axis of g is numerator / denominator
  std::int64_t axis_denominator = 1;
  bool axis_below_bound = false;

  bool partitions_equitable = false;  ///< both canonical partitions, and block formulas match
  bool quotient_agreement = false;    ///< closed-form roots match dense solves
  bool identity_holds = false;
  double f_split_at_theta = 0.0;      ///< f_B(theta); negative when the chain holds

  double chain_gap = 0.0;  ///< mu_split_dense - theta_dense
  bool chain_verdict = false;
  double elapsed_ms = 0.0;

  bool passed() const {
    return bound_check && wiener_check && g_negative && axis_below_bound && partitions_equitable &&
           quotient_agreement && identity_holds && chain_verdict;
  }
};

namespace detail {

inline void validate_chain(const OddFactorParams& p, long long s) {
  p.validate_theorem();
  if (s < p.k + 2) throw ValidationError("s must be at least k+2 (s = k+1 is the extremal case)");
  if (s > p.max_split_size())
    throw ValidationError("s must be at most (n + bk - 2)/(b + 1) = " + std::to_string(p.max_split_size()));
}

struct FamilySpectrum {
  double closed = 0.0;
  double dense = 0.0;
  bool equitable = false;
  IntMatrix3 quotient{};
  WienerBound wiener;
};

inline FamilySpectrum family_spectrum(const FamilySpec& spec, const Cubic& closed_form) {
  const Graph g = build_family(spec);
  const DistanceMatrix d = distance_matrix(g);
  const QuotientMatrix q = quotient_matrix(d, three_block_partition(spec));
  FamilySpectrum out;
  out.closed = largest_root(closed_form);
  out.dense = spectral_radius_dense(d).value;
  out.equitable = q.equitable;
  if (q.equitable) out.quotient = q.exact3();
  out.wiener = wiener_bound(d);
  return out;
}

}  // namespace detail

/// Exact coefficient identity f_B - f_Bstar = (s - k - 1) g, plus the scalar
/// identity at theta after root extraction. Accepts s >= k + 1.
inline bool check_difference_identity(const OddFactorParams& p, long long s) {
  const Cubic fb = char_poly_B(p, s);
  const Cubic fstar = char_poly_Bstar(p);
  const Quadratic g = g_poly(p, s);
  if (fb - fstar != scaled(s - p.k - 1, g)) return false;
  const long double theta = largest_root(fstar);
  return std::abs(fb(theta) - static_cast<long double>(s - p.k - 1) * g(theta)) <= kIdentityTolerance;
}

inline ProofChainReport check_proof_chain(const OddFactorParams& p, long long s) {
  detail::validate_chain(p, s);
  const auto start = std::chrono::steady_clock::now();
  ProofChainReport r;
  r.params = p;
  r.s = s;

  const Cubic fstar = char_poly_Bstar(p);
  const Cubic fb = char_poly_B(p, s);
  const auto star = detail::family_spectrum(extremal_spec(p), fstar);
  const auto split = detail::family_spectrum(split_join_spec(p, s), fb);

  r.theta = star.closed;
  r.theta_dense = star.dense;
  r.mu_split = split.closed;
  r.mu_split_dense = split.dense;
  r.wiener = star.wiener;
  r.bound_target = p.n + p.b + 1;
  r.bound_check = r.theta_dense >= static_cast<double>(r.bound_target) - kBoundSlack &&
                  r.theta >= static_cast<double>(r.bound_target) - kBoundSlack;
  r.wiener_check = r.wiener.numerator >= r.bound_target * r.wiener.denominator;

  const Quadratic g = g_poly(p, s);
  r.g_at_bound = g.exact(r.bound_target);
  r.g_negative = r.g_at_bound < 0;
  std::tie(r.axis_numerator, r.axis_denominator) = g.symmetry_axis();
  // The denominator is -2b < 0; normalize so it is positive.
  if (r.axis_denominator < 0) {
    r.axis_numerator = -r.axis_numerator;
    r.axis_denominator = -r.axis_denominator;
  }
  r.axis_below_bound = r.axis_numerator < r.bound_target * r.axis_denominator;

  r.partitions_equitable = star.equitable && split.equitable && star.quotient == extremal_quotient(p) &&
                           split.quotient == split_join_quotient(p, s) &&
                           characteristic_polynomial(star.quotient) == fstar &&
                           characteristic_polynomial(split.quotient) == fb;
  r.quotient_agreement = std::abs(r.theta - r.theta_dense) <= kQuotientAgreement &&
                         std::abs(r.mu_split - r.mu_split_dense) <= kQuotientAgreement;
  r.identity_holds = check_difference_identity(p, s);
  r.f_split_at_theta = static_cast<double>(fb(static_cast<long double>(r.theta)));

  r.chain_gap = r.mu_split_dense - r.theta_dense;
  r.chain_verdict = r.chain_gap > kChainGap;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Monotonicity lemmas.

/// Comparison K_s v (K_{n_1} u ... u K_{n_t})  against  K_s v (K_{n-s-p(t-1)} u (t-1)K_p).
struct ComparisonCase {
  int s = 0, p = 0;
  std::vector<int> parts;
  bool hypothesis = false;  ///< n_1 >= ... >= n_t >= p >= 1 and n_1 < n - s - p(t-1)
  double lhs = 0.0, rhs = 0.0;
  bool passed = false;
};

inline ComparisonCase family_comparison(int s, int p, std::vector<int> parts) {
  ComparisonCase c{s, p, std::move(parts)};
  const int t = static_cast<int>(c.parts.size());
  const int n = FamilySpec{s, c.parts}.order();
  c.hypothesis = s >= 1 && p >= 1 && t >= 1 && std::is_sorted(c.parts.rbegin(), c.parts.rend()) &&
                 c.parts.back() >= p && c.parts.front() < n - s - p * (t - 1);
  if (!c.hypothesis) return c;
  FamilySpec target{s, {n - s - p * (t - 1)}};
  target.parts.insert(target.parts.end(), static_cast<std::size_t>(t - 1), p);
  c.lhs = spectral_radius_dense(distance_matrix(build_family({s, c.parts}))).value;
  c.rhs = spectral_radius_dense(distance_matrix(build_family(target))).value;
  c.passed = c.lhs - c.rhs > kMonotoneGap;
  return c;
}

struct EdgeAdditionFailure {
  int graph = 0;
  Vertex u = 0, v = 0;
  double gap = 0.0;
};

struct EdgeAdditionSample {
  int id = 0;
  int order = 0;
  std::size_t edges = 0;
  double mu = 0.0;
  int pairs = 0;
  double min_gap = 0.0;  ///< smallest mu(G) - mu(G + uv); 0 when complete
};

struct MonotonicityConfig {
  std::uint64_t seed = 1;
  int graphs = 500;
  int min_order = 3;
  int max_order = 20;
  int comparison_cases = 50;
  unsigned threads = default_threads();
};

struct MonotonicityReport {
  MonotonicityConfig config;
  std::vector<EdgeAdditionSample> samples;
  std::vector<EdgeAdditionFailure> failures;
  long long pairs_checked = 0;
  std::vector<ComparisonCase> comparisons;  ///< hypothesis satisfied
  std::vector<ComparisonCase> skipped;      ///< hypothesis violated, logged
  int comparison_failures = 0;

  bool passed() const {
    return failures.empty() && comparison_failures == 0 &&
           static_cast<int>(comparisons.size()) == config.comparison_cases &&
           static_cast<int>(samples.size()) == config.graphs;
  }
};

inline MonotonicityReport check_monotonicity_lemmas(const MonotonicityConfig& config) {
  if (config.min_order < 2 || config.max_order < config.min_order)
    throw ValidationError("invalid order range for monotonicity sampling");
  MonotonicityReport report;
  report.config = config;
  report.samples.resize(static_cast<std::size_t>(std::max(config.graphs, 0)));
  std::vector<std::vector<EdgeAdditionFailure>> failures(report.samples.size());

  parallel_for(report.samples.size(), config.threads, [&](std::size_t i) {
    Rng rng(Rng::derive(config.seed, i));
    const int n = static_cast<int>(rng.between(config.min_order, config.max_order));
    const Graph g = random_connected(n, 0.05 + 0.6 * rng.unit(), rng);
    auto& sample = report.samples[i];
    sample.id = static_cast<int>(i);
    sample.order = n;
    sample.edges = g.size();
    sample.mu = spectral_radius(distance_matrix(g)).value;
    sample.min_gap = 0.0;
    bool first = true;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        const double gap = sample.mu - spectral_radius(distance_matrix(g.with_edge(u, v))).value;
        ++sample.pairs;
        if (first || gap < sample.min_gap) sample.min_gap = gap;
        first = false;
        if (!(gap > kMonotoneGap)) failures[i].push_back({sample.id, u, v, gap});
      }
  });
  for (std::size_t i = 0; i < failures.size(); ++i) {
    report.pairs_checked += report.samples[i].pairs;
    report.failures.insert(report.failures.end(), failures[i].begin(), failures[i].end());
  }

  // Sequential so the accepted/skipped split is reproducible.
  const std::uint64_t stream = Rng::derive(config.seed, 0x4c656d6d61ULL);
  for (std::uint64_t attempt = 0;
       static_cast<int>(report.comparisons.size()) < config.comparison_cases && attempt < 100ULL * config.comparison_cases + 100;
       ++attempt) {
    Rng rng(Rng::derive(stream, attempt));
    const int s = static_cast<int>(rng.between(1, 4));
    const int p = static_cast<int>(rng.between(1, 3));
    const int t = static_cast<int>(rng.between(2, 4));
    std::vector<int> parts;
    for (int i = 0; i < t; ++i) parts.push_back(static_cast<int>(rng.between(p, p + 5)));
    std::sort(parts.rbegin(), parts.rend());
    auto c = family_comparison(s, p, std::move(parts));
    if (!c.hypothesis) {
      report.skipped.push_back(std::move(c));
      continue;
    }
    if (!c.passed) ++report.comparison_failures;
    report.comparisons.push_back(std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Oracle sweep for the criticality criterion.

struct CriticalitySample {
  int id = 0;
  std::uint64_t seed = 0;
  int order = 0;
  std::size_t edges = 0;
  int b = 1, k = 1;
  bool criterion = false;
  bool definitional = false;
};

struct CriticalitySweepConfig {
  std::uint64_t seed = 1;
  int samples = 2000;
  int max_order = 9;
  unsigned threads = default_threads();
};

struct CriticalitySweepReport {
  CriticalitySweepConfig config;
  std::vector<CriticalitySample> samples;
  int critical = 0;
  int disagreements = 0;
  bool passed() const { return disagreements == 0 && static_cast<int>(samples.size()) == config.samples; }
};

/// Random connected graphs with k in {1,2}, b in {1,3}, n = k (mod 2) and
/// k + 2 <= n <= max_order; compares is_k_critical with the definitional check.
inline CriticalitySweepReport criticality_oracle_sweep(const CriticalitySweepConfig& config) {
  if (config.max_order < 4 || config.max_order > EnumerationLimits{}.max_definitional_order)
    throw ValidationError("max_order must lie in [4, 16]");
  CriticalitySweepReport report;
  report.config = config;
  report.samples.resize(static_cast<std::size_t>(std::max(config.samples, 0)));
  parallel_for(report.samples.size(), config.threads, [&](std::size_t i) {
    auto& out = report.samples[i];
    out.id = static_cast<int>(i);
    out.seed = Rng::derive(config.seed, i);
    Rng rng(out.seed);
    out.k = static_cast<int>(rng.between(1, 2));
    out.b = rng.bernoulli(0.5) ? 1 : 3;
    // Orders k+2, k+4, ... up to max_order.
    const int choices = (config.max_order - out.k - 2) / 2 + 1;
    out.order = out.k + 2 + 2 * static_cast<int>(rng.between(0, choices - 1));
    const Graph g = random_connected(out.order, 0.15 + 0.8 * rng.unit(), rng);
    out.edges = g.size();
    const auto f = OddBoundFunction::constant(out.order, out.b);
    out.criterion = is_k_critical(g, f, out.k).verdict;
    out.definitional = is_k_critical_definitional(g, f, out.k);
  });
  for (const auto& s : report.samples) {
    report.critical += s.criterion;
    report.disagreements += s.criterion != s.definitional;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Counterexample search.

/// True iff g is K_{k+1} v (K_{n-k-b-2} u (b+1)K_1) up to relabeling: exactly
/// k+1 universal vertices whose removal leaves one clique of order n-k-b-2 and
/// b+1 isolated vertices.
inline bool is_extremal_shape(const Graph& g, const OddFactorParams& p) {
  if (g.order() != p.n) return false;
  std::vector<Vertex> universal;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) universal.push_back(v);
  if (static_cast<long long>(universal.size()) != p.k + 1) return false;
  auto [rest, kept] = g.without(VertexSet(universal));
  auto [label, count] = rest.component_labels(VertexSet{});
  std::vector<long long> sizes(static_cast<std::size_t>(count), 0);
  for (int l : label) ++sizes[l];
  std::sort(sizes.rbegin(), sizes.rend());
  std::vector<long long> expected{p.extremal_clique()};
  expected.insert(expected.end(), static_cast<std::size_t>(p.b + 1), 1);
  std::sort(expected.rbegin(), expected.rend());
  if (sizes != expected) return false;
  const long long c = p.extremal_clique();
  return static_cast<long long>(rest.size()) == c * (c - 1) / 2;
}

enum class SampleStatus { admitted, disconnected, low_connectivity, above_threshold };

inline const char* to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::admitted: return "admitted";
    case SampleStatus::disconnected: return "disconnected";
    case SampleStatus::low_connectivity: return "low-connectivity";
    case SampleStatus::above_threshold: return "above-threshold";
  }
  return "?";
}

struct TheoremSample {
  int id = 0;
  std::uint64_t seed = 0;
  double density = 0.0;
  std::size_t edges = 0;
  int connectivity = 0;
  double mu = 0.0;
  SampleStatus status = SampleStatus::disconnected;
  bool critical = false;   ///< meaningful for admitted samples
  bool extremal = false;   ///< isomorphic to the extremal graph
};

struct TheoremOptions {
  unsigned threads = default_threads();
  /// Candidates generated per requested sample before giving up.
  int attempts_per_sample = 50;
};

struct TheoremReport {
  OddFactorParams params;
  std::uint64_t seed = 0;
  int requested = 0;

  double theta = 0.0;        ///< closed-form root
  double theta_dense = 0.0;

  CriticalityWitness extremal;       ///< verdict on the extremal graph itself
  bool extremal_not_critical = false;

  double complete_mu = 0.0;           ///< probe with K_n
  int complete_connectivity = 0;
  bool complete_critical = false;
  bool complete_consistent = false;

  int candidates = 0;
  int rejected_disconnected = 0;
  int rejected_connectivity = 0;
  int rejected_threshold = 0;
  std::vector<TheoremSample> admitted;
  std::vector<int> counterexamples;  ///< ids of admitted, non-critical, non-extremal samples
  bool exhausted = false;            ///< attempt budget ran out before `requested` admissions

  bool passed() const {
    return extremal_not_critical && complete_consistent && counterexamples.empty() && !exhausted;
  }
};

namespace detail {

inline TheoremSample evaluate_candidate(const OddFactorParams& p, double theta, std::uint64_t seed, int id) {
  TheoremSample t;
  t.id = id;
  t.seed = Rng::derive(seed, static_cast<std::uint64_t>(id));
  t.density = 0.3 + 0.1 * (id % 7);
  Rng rng(t.seed);
  const Graph g = erdos_renyi(static_cast<int>(p.n), t.density, rng);
  t.edges = g.size();
  if (!g.is_connected()) return t;
  t.connectivity = vertex_connectivity(g);
  t.mu = spectral_radius(distance_matrix(g)).value;
  if (t.connectivity < p.k + 1) {
    t.status = SampleStatus::low_connectivity;
    return t;
  }
  if (t.mu > theta + kSpectralSlack) {
    t.status = SampleStatus::above_threshold;
    return t;
  }
  t.status = SampleStatus::admitted;
  t.critical = is_k_critical(g, OddBoundFunction::constant(g.order(), static_cast<int>(p.b)), static_cast<int>(p.k)).verdict;
  t.extremal = is_extremal_shape(g, p);
  return t;
}

}  // namespace detail

/// Samples Erdos-Renyi graphs of order n over densities 0.3, 0.4, ..., 0.9 and
/// collects `samples` graphs that are (k+1)-connected with mu(G) <= theta.
/// Each is checked for k-criticality with f = b; a non-critical sample that is
/// not the extremal graph is a counterexample. Candidates are evaluated in
/// batches and merged in index order.
inline TheoremReport verify_theorem_instance(const OddFactorParams& p, int samples, std::uint64_t seed,
                                             const TheoremOptions& options = {}) {
  p.validate_theorem();
  if (samples < 1) throw ValidationError("samples must be at least 1");
  TheoremReport r;
  r.params = p;
  r.seed = seed;
  r.requested = samples;

  const Graph star = extremal_graph(p);
  r.theta = largest_root(char_poly_Bstar(p));
  r.theta_dense = spectral_radius_dense(distance_matrix(star)).value;
  if (std::abs(r.theta - r.theta_dense) > kQuotientAgreement)
    throw std::logic_error("closed-form and dense values of theta disagree: " + std::to_string(r.theta) + " vs " +
                           std::to_string(r.theta_dense));

  const auto f = OddBoundFunction::constant(static_cast<int>(p.n), static_cast<int>(p.b));
  r.extremal = is_k_critical(star, f, static_cast<int>(p.k));
  r.extremal_not_critical = !r.extremal.verdict;

  const Graph kn = complete(static_cast<int>(p.n));
  r.complete_mu = spectral_radius(distance_matrix(kn)).value;
  r.complete_connectivity = vertex_connectivity(kn);
  r.complete_critical = is_k_critical(kn, f, static_cast<int>(p.k)).verdict;
  r.complete_consistent = r.complete_mu <= r.theta + kSpectralSlack && r.complete_connectivity >= p.k + 1 &&
                          r.complete_critical;

  const long long budget = static_cast<long long>(samples) * options.attempts_per_sample;
  const std::size_t batch = 64 * std::max(1u, options.threads);
  std::vector<TheoremSample> slots;
  while (static_cast<int>(r.admitted.size()) < samples && r.candidates < budget) {
    const auto first = r.candidates;
    const auto count = static_cast<std::size_t>(std::min<long long>(static_cast<long long>(batch), budget - first));
    slots.assign(count, {});
    parallel_for(count, options.threads, [&](std::size_t i) {
      slots[i] = detail::evaluate_candidate(p, r.theta, seed, first + static_cast<int>(i));
    });
    for (const auto& t : slots) {
      if (static_cast<int>(r.admitted.size()) == samples) break;
      ++r.candidates;
      switch (t.status) {
        case SampleStatus::disconnected: ++r.rejected_disconnected; break;
        case SampleStatus::low_connectivity: ++r.rejected_connectivity; break;
        case SampleStatus::above_threshold: ++r.rejected_threshold; break;
        case SampleStatus::admitted:
          r.admitted.push_back(t);
          if (!t.critical && !t.extremal) r.counterexamples.push_back(t.id);
          break;
      }
    }
  }
  r.exhausted = static_cast<int>(r.admitted.size()) < samples;
  return r;
}

}  // namespace oddcrit

#endif  // ODDCRIT_THEOREM_LAB_HPP

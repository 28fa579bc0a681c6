// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddcrit/oddcrit.hpp"
#include "oddcrit/report_io.hpp"
#include "support/oracles.hpp"

namespace {

using namespace oddcrit;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::vector<OddFactorParams> grid(long long max_n) {
  std::vector<OddFactorParams> out;
  for (long long b : {1, 3, 5})
    for (long long k : {1, 2, 3})
      for (long long n = k + 2; n <= max_n; n += 2) {
        const OddFactorParams p{b, k, n};
        if (p.meets_order_bound() && p.extremal_clique() >= 1) out.push_back(p);
      }
  return out;
}

std::string point(const OddFactorParams& p) {
  return "(" + std::to_string(p.b) + "," + std::to_string(p.k) + "," + std::to_string(p.n) + ")";
}

Cubic as_cubic(const std::array<long long, 4>& c) { return Cubic{{c[0], c[1], c[2], c[3]}}; }

Outcome exact_spectra() {
  Outcome o;
  double worst = 0.0;
  for (int n = 2; n <= 50; ++n)
    worst = std::max(worst, std::abs(spectral_radius(distance_matrix(complete(n))).value - (n - 1)));
  const Graph p3 = from_edge_list("3 2\n0 1\n1 2\n");
  const double p3_err = std::abs(spectral_radius(distance_matrix(p3)).value - (1.0 + std::sqrt(3.0)));
  o.passed = worst <= 1e-9 && p3_err <= 1e-9;
  std::ostringstream s;
  s << "max |mu(K_n) - (n-1)| = " << worst << ", |mu(P3) - (1+sqrt3)| = " << p3_err;
  o.detail = s.str();
  return o;
}

Outcome wiener_closed_form() {
  Outcome o;
  int points = 0;
  for (const auto& p : grid(60)) {
    ++points;
    const long long twice = 2 * wiener_index(distance_matrix(extremal_graph(p)));
    const long long n = p.n, b = p.b, k = p.k;
    const long long expected = n * n + (2 * b + 1) * n - b * b - 2 * b * k - 5 * b - 2 * k - 4;
    if (twice != expected) {
      o.passed = false;
      o.detail = "mismatch at " + point(p);
      return o;
    }
  }
  o.detail = std::to_string(points) + " grid points";
  return o;
}

Outcome quotient_reproduction() {
  Outcome o;
  int checks = 0;
  double worst = 0.0;
  for (const auto& p : grid(60)) {
    std::vector<FamilySpec> specs{extremal_spec(p)};
    for (long long s : {p.k + 2, p.k + 3})
      if (s <= p.max_split_size()) specs.push_back(split_join_spec(p, s));
    for (const auto& spec : specs) {
      const auto d = distance_matrix(build_family(spec));
      const auto q = quotient_matrix(d, three_block_partition(spec));
      const double gap = std::abs(quotient_largest_eigenvalue(q) - spectral_radius_dense(d).value);
      worst = std::max(worst, gap);
      ++checks;
      if (!q.equitable || gap > 1e-6) {
        o.passed = false;
        o.detail = "failure at " + point(p) + " s=" + std::to_string(spec.s);
        return o;
      }
    }
  }
  std::ostringstream s;
  s << checks << " families, max eigenvalue gap " << worst;
  o.detail = s.str();
  return o;
}

Outcome polynomial_fidelity() {
  Outcome o;
  int checks = 0;
  for (const auto& p : grid(60)) {
    const auto spec = extremal_spec(p);
    const auto q = quotient_matrix(distance_matrix(build_family(spec)), three_block_partition(spec));
    if (!q.equitable || as_cubic(testing::char_poly_by_interpolation(q.exact3())) != char_poly_Bstar(p)) {
      o.passed = false;
      o.detail = "f_B* mismatch at " + point(p);
      return o;
    }
    ++checks;
    for (long long s = p.k + 1; s <= p.max_split_size(); ++s) {
      const auto sspec = split_join_spec(p, s);
      const auto sq = quotient_matrix(distance_matrix(build_family(sspec)), three_block_partition(sspec));
      const Cubic fb = char_poly_B(p, s);
      if (!sq.equitable || as_cubic(testing::char_poly_by_interpolation(sq.exact3())) != fb) {
        o.passed = false;
        o.detail = "f_B mismatch at " + point(p) + " s=" + std::to_string(s);
        return o;
      }
      if (fb - char_poly_Bstar(p) != scaled(s - p.k - 1, g_poly(p, s))) {
        o.passed = false;
        o.detail = "difference identity fails at " + point(p) + " s=" + std::to_string(s);
        return o;
      }
      checks += 2;
    }
  }
  o.detail = std::to_string(checks) + " exact polynomial comparisons";
  return o;
}

Outcome proof_chain() {
  Outcome o;
  int checks = 0;
  double min_gap = 1e300;
  for (const auto& p : grid(60))
    for (long long s = p.k + 2; s <= p.max_split_size(); ++s) {
      const auto r = check_proof_chain(p, s);
      ++checks;
      min_gap = std::min(min_gap, r.chain_gap);
      if (!(r.bound_check && r.axis_below_bound && r.g_negative && r.chain_verdict)) {
        o.passed = false;
        o.detail = "chain fails at " + point(p) + " s=" + std::to_string(s);
        return o;
      }
    }
  std::ostringstream s;
  s << checks << " (b,k,n,s) points, min mu(G_2) - theta = " << min_gap;
  o.detail = s.str();
  return o;
}

Outcome existence_oracle() {
  Outcome o;
  int graphs = 0, with_factor = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : testing::all_graphs_up_to_isomorphism(n)) {
      if (!g.is_connected()) continue;
      ++graphs;
      for (int b : {1, 3}) {
        const auto f = OddBoundFunction::constant(n, b);
        const bool crit = has_odd_factor(g, f).verdict;
        const bool brute = find_odd_factor_bruteforce(g, f).has_value();
        with_factor += brute;
        if (crit != brute) {
          o.passed = false;
          o.detail = "disagreement on " + to_edge_list(g);
          return o;
        }
      }
    }
  o.detail = std::to_string(graphs) + " connected graphs up to isomorphism, " + std::to_string(with_factor) +
             " (graph, b) pairs with a factor";
  return o;
}

CriticalitySweepConfig sweep_config() {
  CriticalitySweepConfig c;
  c.seed = 2024;
  c.samples = 2000;
  c.max_order = 9;
  return c;
}

MonotonicityConfig monotone_config() {
  MonotonicityConfig c;
  c.seed = 2025;
  c.graphs = 500;
  c.max_order = 20;
  c.comparison_cases = 50;
  return c;
}

constexpr int kTheoremSamples = 1000;
constexpr std::uint64_t kTheoremSeed = 2026;

Outcome criticality_oracle(std::string& json) {
  const auto r = criticality_oracle_sweep(sweep_config());
  json = to_json(r).dump();
  return {r.passed(), std::to_string(r.samples.size()) + " samples, " + std::to_string(r.critical) + " critical, " +
                          std::to_string(r.disagreements) + " disagreements"};
}

Outcome monotonicity(std::string& json) {
  const auto r = check_monotonicity_lemmas(monotone_config());
  json = to_json(r).dump();
  return {r.passed(), std::to_string(r.samples.size()) + " graphs, " + std::to_string(r.pairs_checked) +
                          " edge additions, " + std::to_string(r.failures.size()) + " failures; " +
                          std::to_string(r.comparisons.size()) + " family comparisons (" +
                          std::to_string(r.skipped.size()) + " skipped), " + std::to_string(r.comparison_failures) +
                          " failures"};
}

Outcome theorem_sanity(std::string& json) {
  const OddFactorParams p{1, 1, 15};
  const auto r = verify_theorem_instance(p, kTheoremSamples, kTheoremSeed);
  json = to_json(r).dump();
  const bool theta_ok = std::abs(r.theta - 17.707) <= 0.01;
  const bool witness_ok = !r.extremal.verdict && r.extremal.witness == VertexSet({0, 1}) && r.extremal.q == 3 &&
                          r.extremal.bound == 1;
  std::ostringstream s;
  s << "theta = " << r.theta << ", G_* witness " << (witness_ok ? "{0,1} q=3 > 1" : "WRONG") << ", "
    << r.admitted.size() << " admitted of " << r.candidates << " candidates, " << r.counterexamples.size()
    << " counterexamples, K_15 probe " << (r.complete_consistent ? "ok" : "FAILED");
  return {theta_ok && witness_ok && r.passed() && static_cast<int>(r.admitted.size()) == kTheoremSamples, s.str()};
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&all](int id, const std::string& name, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  };

  std::string sweep_json, monotone_json, theorem_json;
  report(1, "exact spectra", exact_spectra);
  report(2, "Wiener closed form", wiener_closed_form);
  report(3, "quotient eigenvalues", quotient_reproduction);
  report(4, "polynomial fidelity", polynomial_fidelity);
  report(5, "proof chain", proof_chain);
  report(6, "existence oracle", existence_oracle);
  report(7, "criticality oracle", [&] { return criticality_oracle(sweep_json); });
  report(8, "monotonicity", [&] { return monotonicity(monotone_json); });
  report(9, "theorem sanity", [&] { return theorem_sanity(theorem_json); });
  report(10, "determinism", [&] {
    std::string a, b, c;
    criticality_oracle(a);
    monotonicity(b);
    theorem_sanity(c);
    const bool same = !sweep_json.empty() && a == sweep_json && b == monotone_json && c == theorem_json;
    return Outcome{same, same ? "criteria 7-9 reports byte-identical on rerun" : "reports differ on rerun"};
  });
  return all ? 0 : 1;
}

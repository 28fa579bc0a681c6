#ifndef ODDCRIT_REPORT_IO_HPP
#define ODDCRIT_REPORT_IO_HPP

// JSON and CSV serialization of lab reports. Key order is fixed and no
// wall-clock data is written unless asked for, so equal inputs give equal bytes.

#include <sstream>
#include <string>

#include <json.hpp>

#include "oddcrit/theorem_lab.hpp"

namespace oddcrit {

using Json = nlohmann::ordered_json;

inline Json params_json(const OddFactorParams& p) { return Json{{"b", p.b}, {"k", p.k}, {"n", p.n}}; }

inline Json vertex_set_json(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

inline Json witness_json(const CriticalityWitness& w) {
  Json j{{"verdict", w.verdict}};
  if (w.witness) {
    j["witness"] = vertex_set_json(*w.witness);
    j["q"] = w.q;
    j["bound"] = w.bound;
  }
  return j;
}

inline Json to_json(const ProofChainReport& r, bool with_timing = false) {
  Json j;
  j["params"] = params_json(r.params);
  j["s"] = r.s;
  j["theta"] = r.theta;
  j["theta_dense"] = r.theta_dense;
  j["mu_split"] = r.mu_split;
  j["mu_split_dense"] = r.mu_split_dense;
  j["wiener_bound"] = {{"numerator", r.wiener.numerator}, {"denominator", r.wiener.denominator}, {"value", r.wiener.value()}};
  j["bound_target"] = r.bound_target;
  j["bound_check"] = r.bound_check;
  j["wiener_check"] = r.wiener_check;
  j["g_at_bound"] = r.g_at_bound;
  j["g_negative"] = r.g_negative;
  j["axis"] = {{"numerator", r.axis_numerator}, {"denominator", r.axis_denominator}};
  j["axis_below_bound"] = r.axis_below_bound;
  j["partitions_equitable"] = r.partitions_equitable;
  j["quotient_agreement"] = r.quotient_agreement;
  j["identity_holds"] = r.identity_holds;
  j["f_split_at_theta"] = r.f_split_at_theta;
  j["chain_gap"] = r.chain_gap;
  j["chain_verdict"] = r.chain_verdict;
  j["tolerances"] = {{"bound_slack", kBoundSlack}, {"chain_gap", kChainGap}, {"quotient_agreement", kQuotientAgreement},
                     {"identity", kIdentityTolerance}};
  j["passed"] = r.passed();
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["params"] = params_json(r.params);
  j["seed"] = r.seed;
  j["requested"] = r.requested;
  j["theta"] = r.theta;
  j["theta_dense"] = r.theta_dense;
  j["tolerances"] = {{"spectral_slack", kSpectralSlack}, {"theta_agreement", kQuotientAgreement}};
  j["extremal"] = witness_json(r.extremal);
  j["extremal_not_critical"] = r.extremal_not_critical;
  j["complete_probe"] = {{"mu", r.complete_mu},
                         {"connectivity", r.complete_connectivity},
                         {"critical", r.complete_critical},
                         {"consistent", r.complete_consistent}};
  j["candidates"] = r.candidates;
  j["rejected"] = {{"disconnected", r.rejected_disconnected},
                   {"low_connectivity", r.rejected_connectivity},
                   {"above_threshold", r.rejected_threshold}};
  j["admitted"] = r.admitted.size();
  j["exhausted"] = r.exhausted;
  j["counterexamples"] = r.counterexamples;
  Json rows = Json::array();
  for (const auto& t : r.admitted)
    rows.push_back({{"id", t.id},
                    {"seed", t.seed},
                    {"density", t.density},
                    {"edges", t.edges},
                    {"kappa", t.connectivity},
                    {"mu", t.mu},
                    {"critical", t.critical},
                    {"extremal", t.extremal}});
  j["samples"] = std::move(rows);
  j["passed"] = r.passed();
  return j;
}

/// One row per admitted sample: id,seed,kappa,mu,verdict.
inline std::string to_csv(const TheoremReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "id,seed,kappa,mu,verdict\n";
  for (const auto& t : r.admitted)
    out << t.id << ',' << t.seed << ',' << t.connectivity << ',' << t.mu << ','
        << (t.critical ? "critical" : (t.extremal ? "extremal" : "counterexample")) << '\n';
  return out.str();
}

inline Json to_json(const MonotonicityReport& r) {
  Json j;
  j["config"] = {{"seed", r.config.seed},
                 {"graphs", r.config.graphs},
                 {"min_order", r.config.min_order},
                 {"max_order", r.config.max_order},
                 {"comparison_cases", r.config.comparison_cases}};
  j["tolerance"] = kMonotoneGap;
  j["pairs_checked"] = r.pairs_checked;
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"id", s.id}, {"n", s.order}, {"m", s.edges}, {"mu", s.mu}, {"pairs", s.pairs}, {"min_gap", s.min_gap}});
  j["edge_addition"] = std::move(samples);
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"graph", f.graph}, {"u", f.u}, {"v", f.v}, {"gap", f.gap}});
  j["edge_addition_failures"] = std::move(failures);
  auto case_json = [](const ComparisonCase& c) {
    Json cj{{"s", c.s}, {"p", c.p}, {"parts", c.parts}, {"hypothesis", c.hypothesis}};
    if (c.hypothesis) {
      cj["lhs"] = c.lhs;
      cj["rhs"] = c.rhs;
      cj["passed"] = c.passed;
    }
    return cj;
  };
  Json cases = Json::array(), skipped = Json::array();
  for (const auto& c : r.comparisons) cases.push_back(case_json(c));
  for (const auto& c : r.skipped) skipped.push_back(case_json(c));
  j["comparisons"] = std::move(cases);
  j["comparisons_skipped"] = std::move(skipped);
  j["comparison_failures"] = r.comparison_failures;
  j["passed"] = r.passed();
  return j;
}

inline Json to_json(const CriticalitySweepReport& r) {
  Json j;
  j["config"] = {{"seed", r.config.seed}, {"samples", r.config.samples}, {"max_order", r.config.max_order}};
  Json rows = Json::array();
  for (const auto& s : r.samples)
    rows.push_back({{"id", s.id},
                    {"seed", s.seed},
                    {"n", s.order},
                    {"m", s.edges},
                    {"b", s.b},
                    {"k", s.k},
                    {"criterion", s.criterion},
                    {"definitional", s.definitional}});
  j["samples"] = std::move(rows);
  j["critical"] = r.critical;
  j["disagreements"] = r.disagreements;
  j["passed"] = r.passed();
  return j;
}

}  // namespace oddcrit

#endif  // ODDCRIT_REPORT_IO_HPP

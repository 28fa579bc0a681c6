#ifndef ODDCRIT_CLI_HPP
#define ODDCRIT_CLI_HPP

// Command-line front end. Exit codes: 0 success or true verdict, 1 false
// verdict, 2 usage or validation error. Data goes to `out`, diagnostics to `err`.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddcrit/factors.hpp"
#include "oddcrit/graph.hpp"
#include "oddcrit/params.hpp"
#include "oddcrit/quotient.hpp"
#include "oddcrit/report_io.hpp"
#include "oddcrit/spectrum.hpp"
#include "oddcrit/theorem_lab.hpp"

namespace oddcrit::cli {

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

inline std::vector<int> parse_sizes(const std::string& spec) {
  std::vector<int> sizes;
  std::stringstream in(spec);
  for (std::string field; std::getline(in, field, ':');) {
    int value = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || p != field.data() + field.size() || value < 1)
      throw ValidationError("malformed size list \"" + spec + "\", expected e.g. 2:11:2");
    sizes.push_back(value);
  }
  if (sizes.empty()) throw ValidationError("empty size list");
  return sizes;
}

/// One block per line, labels separated by spaces.
inline VertexPartition read_partition(const std::string& path, int order) {
  std::stringstream in(read_file(path));
  std::vector<VertexSet> blocks;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::vector<Vertex> members;
    for (std::string tok; fields >> tok;) {
      Vertex v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) throw ParseError(lineno, "malformed vertex label " + tok);
      members.push_back(v);
    }
    blocks.emplace_back(std::move(members));
  }
  return VertexPartition(order, std::move(blocks));
}

inline Graph load_graph(const std::string& path) { return from_edge_list(read_file(path)); }

/// Collects config and results; renders as key-value text or JSON.
struct Report {
  Json config;
  Json data;
  bool json = false;

  void emit(std::ostream& out) const {
    if (json) {
      Json j{{"config", config}, {"result", data}};
      out << j.dump(2) << '\n';
      return;
    }
    auto line = [&out](const std::string& prefix, const std::string& key, const Json& v) {
      out << prefix << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    };
    for (const auto& [k, v] : config.items()) line("config.", k, v);
    for (const auto& [k, v] : data.items()) line("", k, v);
  }
};

}  // namespace detail

struct Options {
  std::string format = "text";
  unsigned threads = default_threads();

  std::string input;
  std::string family;
  std::optional<long long> b, k, n, s;
  std::string parts, blocks, partition_file, out_path, csv_path;
  double tol = kDefaultTolerance;
  int samples = 1000;
  std::uint64_t seed = 1;
  bool timing = false;
};

inline OddFactorParams require_params(const Options& o, bool need_k = true) {
  if (!o.b || !o.n || (need_k && !o.k)) throw ValidationError("--b, --k and --n are required");
  return OddFactorParams{*o.b, o.k.value_or(1), *o.n};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"oddcrit: distance spectral radius and [1,b]-odd factor criticality"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_params = [&o](CLI::App* sub) {
    sub->add_option("--b", o.b, "Odd degree bound b");
    sub->add_option("--k", o.k, "Number of deleted vertices k");
    sub->add_option("--n", o.n, "Order n");
  };

  auto* construct = app.add_subcommand("construct", "Write the edge list of a family graph");
  construct->add_option("--family", o.family, "extremal | split-join")->required()->check(CLI::IsMember({"extremal", "split-join"}));
  add_params(construct);
  construct->add_option("--s", o.s, "Join clique order");
  construct->add_option("--parts", o.parts, "Colon-separated part orders, e.g. 11:1:1");
  construct->add_option("-o,--out", o.out_path, "Edge-list output file (default: standard output)");
  add_format(construct);

  auto* spectrum = app.add_subcommand("spectrum", "Wiener index and distance spectral radius");
  spectrum->add_option("file", o.input, "Edge-list file")->required();
  spectrum->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  add_format(spectrum);

  auto* quotient = app.add_subcommand("quotient", "Quotient matrix of the distance matrix");
  quotient->add_option("file", o.input, "Edge-list file")->required();
  auto* blocks_opt = quotient->add_option("--blocks", o.blocks, "Consecutive block sizes, e.g. 2:11:2");
  auto* part_opt = quotient->add_option("--partition", o.partition_file, "Partition file, one block per line");
  blocks_opt->excludes(part_opt);
  add_format(quotient);

  auto* factor = app.add_subcommand("factor", "Decide [1,b]-odd factor existence");
  factor->add_option("file", o.input, "Edge-list file")->required();
  factor->add_option("--b", o.b, "Odd degree bound b")->required();
  add_format(factor);

  auto* critical = app.add_subcommand("critical", "Decide k-criticality for [1,b]-odd factors");
  critical->add_option("file", o.input, "Edge-list file")->required();
  critical->add_option("--b", o.b, "Odd degree bound b")->required();
  critical->add_option("--k", o.k, "Number of deleted vertices k")->required();
  add_format(critical);

  auto* connectivity = app.add_subcommand("connectivity", "Vertex connectivity");
  connectivity->add_option("file", o.input, "Edge-list file")->required();
  add_format(connectivity);

  auto* verify = app.add_subcommand("verify-theorem", "Seeded counterexample search");
  add_params(verify);
  verify->add_option("--samples", o.samples, "Admitted samples to collect")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Sampler seed");
  verify->add_option("--out", o.out_path, "Full JSON report file");
  verify->add_option("--csv", o.csv_path, "Per-sample CSV file");
  verify->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify);

  auto* chain = app.add_subcommand("proof-chain", "Check the inequality chain at (b, k, n, s)");
  add_params(chain);
  chain->add_option("--s", o.s, "Size of the deleted set")->required();
  chain->add_flag("--timing", o.timing, "Include elapsed time");
  add_format(chain);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  detail::Report report;
  report.json = o.format == "json";
  auto& cfg = report.config;
  auto& data = report.data;

  try {
    if (*construct) {
      cfg["command"] = "construct";
      cfg["family"] = o.family;
      FamilySpec spec;
      if (o.family == "extremal") {
        auto p = require_params(o);
        cfg["params"] = params_json(p);
        spec = extremal_spec(p);
      } else if (!o.parts.empty()) {
        if (!o.s) throw ValidationError("--s is required with --parts");
        spec = FamilySpec{static_cast<int>(*o.s), detail::parse_sizes(o.parts)};
      } else {
        auto p = require_params(o);
        if (!o.s) throw ValidationError("--s is required for split-join");
        cfg["params"] = params_json(p);
        spec = split_join_spec(p, *o.s);
      }
      cfg["s"] = spec.s;
      cfg["parts"] = spec.parts;
      const Graph g = build_family(spec);
      if (o.out_path.empty()) {
        out << to_edge_list(g);
        return kOk;
      }
      detail::write_file(o.out_path, to_edge_list(g));
      cfg["out"] = o.out_path;
      data["order"] = g.order();
      data["size"] = g.size();
      report.emit(out);
      return kOk;
    }

    if (*verify) {
      auto p = require_params(o);
      cfg["command"] = "verify-theorem";
      cfg["params"] = params_json(p);
      cfg["samples"] = o.samples;
      cfg["seed"] = o.seed;
      const auto r = verify_theorem_instance(p, o.samples, o.seed, TheoremOptions{o.threads});
      Json full = to_json(r);
      if (!o.out_path.empty()) detail::write_file(o.out_path, Json{{"config", cfg}, {"report", full}}.dump(2) + "\n");
      if (!o.csv_path.empty()) detail::write_file(o.csv_path, to_csv(r));
      if (report.json) {
        data = std::move(full);
      } else {
        for (const char* key : {"theta", "theta_dense", "extremal", "extremal_not_critical", "complete_probe",
                                "candidates", "rejected", "admitted", "exhausted", "counterexamples", "passed"})
          data[key] = full[key];
      }
      report.emit(out);
      if (r.exhausted) err << "warning: sampler budget exhausted before collecting " << o.samples << " samples\n";
      return r.passed() ? kOk : kFalse;
    }

    if (*chain) {
      auto p = require_params(o);
      cfg["command"] = "proof-chain";
      cfg["params"] = params_json(p);
      cfg["s"] = *o.s;
      const auto r = check_proof_chain(p, *o.s);
      data = to_json(r, o.timing);
      report.emit(out);
      return r.passed() ? kOk : kFalse;
    }

    // File-based subcommands.
    cfg["input"] = o.input;
    const Graph g = detail::load_graph(o.input);

    if (*spectrum) {
      cfg["command"] = "spectrum";
      cfg["tolerance"] = o.tol;
      const auto d = distance_matrix(g);
      const auto est = spectral_radius(d, o.tol);
      const auto bound = wiener_bound(d);
      data["n"] = g.order();
      data["m"] = g.size();
      data["W"] = wiener_index(d);
      data["bound"] = bound.value();
      data["bound_exact"] = std::to_string(bound.numerator) + "/" + std::to_string(bound.denominator);
      data["mu"] = est.value;
      data["residual"] = est.residual;
      data["iterations"] = est.iterations;
      if (g.order() <= kDenseOrderCap) data["mu_dense"] = spectral_radius_dense(d).value;
      report.emit(out);
      return kOk;
    }

    if (*quotient) {
      cfg["command"] = "quotient";
      std::optional<VertexPartition> pi;
      if (!o.blocks.empty()) {
        cfg["blocks"] = o.blocks;
        pi = VertexPartition::from_sizes(g.order(), detail::parse_sizes(o.blocks));
      } else if (!o.partition_file.empty()) {
        cfg["partition"] = o.partition_file;
        pi = detail::read_partition(o.partition_file, g.order());
      } else {
        throw ValidationError("one of --blocks or --partition is required");
      }
      const auto q = quotient_matrix(distance_matrix(g), *pi);
      Json rows = Json::array();
      for (std::size_t i = 0; i < q.rank; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < q.rank; ++j) row.push_back(q(i, j));
        rows.push_back(std::move(row));
      }
      data["rank"] = q.rank;
      data["matrix"] = std::move(rows);
      data["equitable"] = q.equitable;
      data["largest_eigenvalue"] = quotient_largest_eigenvalue(q);
      if (q.equitable && q.rank == 3) {
        const auto c = characteristic_polynomial(q.exact3());
        data["char_poly"] = c.c;
        data["largest_root"] = largest_root(c);
      }
      report.emit(out);
      return kOk;
    }

    if (*factor) {
      cfg["command"] = "factor";
      cfg["b"] = *o.b;
      const auto w = has_odd_factor(g, OddBoundFunction::constant(g.order(), static_cast<int>(*o.b)));
      data = witness_json(w);
      report.emit(out);
      return w.verdict ? kOk : kFalse;
    }

    if (*critical) {
      cfg["command"] = "critical";
      cfg["b"] = *o.b;
      cfg["k"] = *o.k;
      const auto w = is_k_critical(g, OddBoundFunction::constant(g.order(), static_cast<int>(*o.b)), static_cast<int>(*o.k));
      data = witness_json(w);
      report.emit(out);
      return w.verdict ? kOk : kFalse;
    }

    if (*connectivity) {
      cfg["command"] = "connectivity";
      data["kappa"] = vertex_connectivity(g);
      report.emit(out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << o.input << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace oddcrit::cli

#endif  // ODDCRIT_CLI_HPP

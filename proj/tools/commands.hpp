// Copyright 2026 The ginv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file commands.hpp
/// \brief The ginv subcommands as in-process functions.
///
/// Every command returns a CommandOutcome instead of printing, so tests can
/// drive the exact code path the executable uses. Exit codes: 0 success,
/// 1 bad input or parameters, 2 mathematical failure (not invertible, or a
/// verification mismatch).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ginv/ginv.hpp"

namespace ginv::cli {

inline constexpr const char* kVersion = "1.0.0";

struct CommandOutcome {
  int exit_code = 0;
  std::string payload;     ///< standard output
  std::string diagnostic;  ///< standard error
};

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Serialization helpers

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json arcs_json(const Digraph& d) {
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back(Json::array({a.from, a.to, to_json(a.multiplicity)}));
  return arcs;
}

inline Json edges_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, to_json(e.multiplicity)}));
  return edges;
}

inline Json digraph_json(const Digraph& d) { return Json{{"n", d.size()}, {"arcs", arcs_json(d)}}; }

inline Json provenance(const std::string& command) {
  return Json{{"tool", "ginv"}, {"version", kVersion}, {"command", command}};
}

inline Json pair_value_json(const PairValue& pv) {
  return Json{{"pair", Json::array({pv.i, pv.j})},
              {"pairing", pv.pairing},
              {"inverseEntry", to_json(pv.inverse_entry)},
              {"value", to_json(pv.value)}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Input handling

/// A parsed input file, reduced to its associated digraph when undirected.
struct LoadedInput {
  std::optional<Reduction> reduction;  ///< set for undirected input
  std::optional<Multigraph> graph;
  Digraph digraph;
};

inline LoadedInput load_input(const std::string& text) {
  LoadedInput in;
  ParsedGraph parsed = parse_graph(text);
  if (auto* g = std::get_if<Multigraph>(&parsed)) {
    in.graph = *g;
    in.reduction = reduce(*g);
    in.digraph = in.reduction->digraph;
  } else {
    in.digraph = std::get<Digraph>(parsed);
  }
  return in;
}

inline CommandOutcome input_error(const std::exception& e) {
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) return {1, "", std::string("parse error: ") + pe->what() + "\n"};
  return {1, "", std::string("invalid input: ") + e.what() + "\n"};
}

inline Json input_json(const LoadedInput& in) {
  Json j{{"kind", in.graph ? "graph" : "digraph"},
         {"vertices", in.graph ? in.graph->vertex_count() : in.digraph.size()}};
  if (in.reduction) {
    Json labeling = Json::array();
    const auto& lab = in.reduction->labeling;
    for (int v = 1; v <= lab.vertex_count(); ++v)
      labeling.push_back(Json{{"vertex", v},
                              {"column", lab.at(v).column},
                              {"side", lab.at(v).side == Side::Bottom ? "bottom" : "top"}});
    j["labeling"] = labeling;
  } else {
    j["labeling"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  bool all_pairs = false;
};

inline Json analysis_json(const LoadedInput& in, const AnalyzeOptions& opts, const std::string& command) {
  const Digraph& d = in.digraph;
  const LongestPaths longest(d);
  const InvertibilityReport report = decide(d);
  const Digraph g = gamma(d, longest);
  const Digraph dl = delta(d, longest);

  Json out;
  out["input"] = input_json(in);
  out["digraph"] = digraph_json(d);
  if (auto profile = analyze(d))
    out["digraph"]["unicyclic"] =
        Json{{"first", profile->first}, {"last", profile->last}, {"m", profile->m}, {"k", profile->k}};
  else
    out["digraph"]["unicyclic"] = nullptr;
  out["gamma"] = Json{{"arcs", arcs_json(g)}, {"bipartite", report.gamma_bipartite}, {"simple", report.gamma_simple}};
  out["delta"] = Json{{"arcs", arcs_json(dl)}, {"bipartite", is_bipartite(dl)}};

  Json pairs;
  pairs["prime"] = Json::array();
  for (const auto& pv : report.prime_pairs) pairs["prime"].push_back(pair_value_json(pv));
  pairs["failingPair"] = report.failing_pair ? pair_value_json(*report.failing_pair) : Json(nullptr);
  if (opts.all_pairs) {
    const ExactMatrix inv = inverse_b(b_matrix(d));
    Json all = Json::array();
    for (int i = 1; i <= d.size(); ++i)
      for (int j = i + 1; j <= d.size(); ++j) {
        const PairClass cls = classify_pair(d, longest, i, j);
        PairValue pv{i, j, longest.pairing(i, j), inv(i, j), 0};
        pv.value = pv.pairing * pv.inverse_entry;
        Json item = pair_value_json(pv);
        item["class"] = to_string(cls.kind);
        if (cls.kind == PairClass::Kind::Composite) item["witness"] = cls.witness;
        all.push_back(item);
      }
    pairs["all"] = all;
  }
  out["pairs"] = pairs;
  out["invertible"] = report.invertible;
  out["simplyInvertible"] = report.simply_invertible;
  out["signing"] = report.signing ? Json(report.signing->values()) : Json(nullptr);
  out["inverse"] = report.inverse ? digraph_json(*report.inverse) : Json(nullptr);
  out["reflexive"] = is_reflexive(d);
  out["provenance"] = provenance(command);
  return out;
}

inline CommandOutcome run_analyze(const std::string& text, const AnalyzeOptions& opts = {}) {
  LoadedInput in;
  try {
    in = load_input(text);
  } catch (const std::exception& e) {
    return input_error(e);
  }
  return {0, dump(analysis_json(in, opts, "analyze")), ""};
}

// ---------------------------------------------------------------------------
// invert

enum class GraphFormat { Dg, Dot, Json };

inline std::optional<GraphFormat> parse_format(const std::string& name) {
  if (name == "dg") return GraphFormat::Dg;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  return std::nullopt;
}

inline std::string failure_reason(const InvertibilityReport& r) {
  if (!r.gamma_bipartite) return "maximal-path subgraph is not bipartite";
  std::ostringstream os;
  os << "prime pair (" << r.failing_pair->i << "," << r.failing_pair->j << ") has value " << r.failing_pair->value;
  return os.str();
}

inline CommandOutcome run_invert(const std::string& text, GraphFormat format = GraphFormat::Dg) {
  LoadedInput in;
  try {
    in = load_input(text);
  } catch (const std::exception& e) {
    return input_error(e);
  }
  const InvertibilityReport report = decide(in.digraph);
  if (!report.invertible)
    return {2, dump(analysis_json(in, {}, "invert")), "not invertible: " + failure_reason(report) + "\n"};

  const Digraph& closure = *report.inverse;
  if (in.reduction) {
    const Multigraph inverse = restore_labels(closure, in.reduction->labeling);
    switch (format) {
      case GraphFormat::Dg: return {0, format_graph(inverse), ""};
      case GraphFormat::Dot: return {0, to_dot(inverse, "Ginv"), ""};
      case GraphFormat::Json:
        return {0,
                dump(Json{{"kind", "graph"},
                          {"vertices", inverse.vertex_count()},
                          {"edges", edges_json(inverse)},
                          {"provenance", provenance("invert")}}),
                ""};
    }
  }
  switch (format) {
    case GraphFormat::Dg: return {0, format_graph(closure), ""};
    case GraphFormat::Dot: return {0, to_dot(closure, "Dinv"), ""};
    case GraphFormat::Json:
      return {0,
              dump(Json{{"kind", "digraph"},
                        {"n", closure.size()},
                        {"arcs", arcs_json(closure)},
                        {"provenance", provenance("invert")}}),
              ""};
  }
  return {1, "", "unknown format\n"};
}

// ---------------------------------------------------------------------------
// generate unicyclic

struct GenerateOptions {
  int m = 0;
  int n = 0;
  int v = 0;
  std::optional<std::vector<int>> t;
  std::optional<std::vector<int>> p;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<std::size_t>> choices;
  bool invertible_only = false;
  GraphFormat format = GraphFormat::Json;
};

namespace detail {

inline std::vector<int> chain_partition(int n) {
  std::vector<int> p(static_cast<std::size_t>(n), 1);
  p.front() = 0;
  p.back() = 2;
  return p;
}

inline Json cycle_json(const CycleSets& c) {
  Json sets = Json::object();
  for (int i = c.v + 1; i <= c.v + c.n; ++i) sets[std::to_string(i)] = c.at(i);
  return sets;
}

}  // namespace detail

inline CommandOutcome run_generate_unicyclic(const GenerateOptions& opts) {
  if (opts.seed && opts.choices) return {1, "", "use either --seed or --choices, not both\n"};
  const std::uint64_t seed = opts.seed.value_or(0);
  SeededChooser rng(seed);
  bool used_rng = false;

  std::vector<int> t;
  std::optional<MotzkinPartition> p;
  try {
    validate_unicyclic_shape(opts.m, opts.n, opts.v, opts.p.value_or(detail::chain_partition(std::max(opts.n, 2))));
    std::optional<MotzkinPartition> given_p;
    if (opts.p) given_p = MotzkinPartition(*opts.p);
    if (opts.invertible_only && opts.n % 2 == 1) {
      const auto chain = detail::chain_partition(opts.n);
      if (given_p && given_p->parts() != chain)
        return {1, "", "no invertible unicyclic digraph exists for odd N unless P = (0,1,...,1,2)\n"};
      given_p = MotzkinPartition(chain);
    }
    used_rng = !opts.t || !given_p;
    auto [tt, pp] = sample_unicyclic_parameters(opts.m, opts.n, opts.v, opts.t, given_p, rng);
    t = std::move(tt);
    p = std::move(pp);
  } catch (const PreconditionError& e) {
    return {1, "", std::string("infeasible parameters: ") + e.what() + "\n"};
  }

  UnicyclicBuild build;
  std::string generator;
  try {
    auto run = [&](auto& chooser) {
      if (opts.invertible_only && opts.n % 2 == 1)
        return build_unicyclic(opts.m, t, chain_cycle(opts.n, opts.v), chooser);
      return build_unicyclic(opts.m, opts.n, opts.v, t, *p, chooser);
    };
    if (opts.choices) {
      ScriptedChooser scripted(*opts.choices);
      build = run(scripted);
      if (!scripted.exhausted()) return {1, "", "choice list has unused entries\n"};
      generator = "scripted";
    } else if (opts.seed || used_rng) {
      build = run(rng);
      used_rng = true;
      generator = SeededChooser::kGenerator;
    } else {
      FirstChoice first;
      build = run(first);
      generator = "first";
    }
  } catch (const PreconditionError& e) {
    return {1, "", std::string("infeasible parameters: ") + e.what() + "\n"};
  }

  const bool invertible = constructed_invertible(build.cycle);
  Json choices = Json::array();
  for (const auto& c : build.choices) choices.push_back(c.index);
  Json prov = provenance("generate unicyclic");
  prov["M"] = opts.m;
  prov["N"] = opts.n;
  prov["v"] = opts.v;
  prov["T"] = t;
  prov["P"] = p->parts();
  prov["generator"] = generator;
  prov["seed"] = used_rng ? Json(seed) : Json(nullptr);
  prov["choices"] = choices;
  prov["invertibleOnly"] = opts.invertible_only;
  prov["attempts"] = 1;

  if (opts.format == GraphFormat::Dg) {
    std::ostringstream os;
    os << "# ginv generate unicyclic " << prov.dump() << "\n" << format_graph(build.digraph);
    return {0, os.str(), ""};
  }
  if (opts.format == GraphFormat::Dot) return {0, to_dot(build.digraph, "U"), ""};
  Json adjacency = Json::object();
  for (int i = 2; i <= opts.m; ++i) adjacency[std::to_string(i)] = build.adjacency[static_cast<std::size_t>(i - 1)];
  Json out{{"digraph", digraph_json(build.digraph)},
           {"cycleSets", detail::cycle_json(build.cycle)},
           {"adjacencySets", adjacency},
           {"invertible", invertible},
           {"provenance", prov}};
  return {0, dump(out), ""};
}

// ---------------------------------------------------------------------------
// enumerate

inline constexpr int kMaxMotzkinN = 12;
inline constexpr int kMaxEnumerateN = 5;

inline CommandOutcome run_enumerate_motzkin(int n) {
  if (n < 2 || n > kMaxMotzkinN) return {1, "", "motzkin enumeration needs 2 <= N <= 12\n"};
  std::ostringstream os;
  const auto parts = motzkin_enumerate(n);
  for (std::size_t k = 0; k < parts.size(); ++k) os << Json{{"index", k}, {"parts", parts[k].parts()}}.dump() << "\n";
  os << Json{{"count", parts.size()}, {"provenance", provenance("enumerate motzkin")}}.dump() << "\n";
  return {0, os.str(), ""};
}

inline CommandOutcome run_enumerate_digraphs(int n, int max_mult, bool classify) {
  if (n < 1 || n > kMaxEnumerateN || max_mult < 1 || max_mult > 2)
    return {1, "", "digraph enumeration needs 1 <= n <= 5 and 1 <= max-mult <= 2\n"};
  const auto family = oracle::enumerate_digraphs(n, max_mult);
  std::ostringstream os;
  std::uint64_t invertible = 0, simply = 0;
  for (std::uint64_t k = 0; k < family.size(); ++k) {
    const Digraph d = family.at(k);
    Json item{{"index", k}, {"n", n}, {"arcs", arcs_json(d)}};
    if (classify) {
      const auto r = decide(d);
      item["invertible"] = r.invertible;
      item["simplyInvertible"] = r.simply_invertible;
      invertible += r.invertible;
      simply += r.simply_invertible;
    }
    os << item.dump() << "\n";
  }
  Json summary{{"count", family.size()}};
  if (classify)
    summary["census"] = Json{{"invertible", invertible},
                             {"simplyInvertible", simply},
                             {"nonInvertible", family.size() - invertible}};
  summary["provenance"] = provenance("enumerate digraphs");
  os << summary.dump() << "\n";
  return {0, os.str(), ""};
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  int jobs = 1;
  bool mutate_decide = false;  ///< harness self-test: flips every verdict
};

struct Mismatch {
  std::uint64_t index = 0;
  std::string check;
  Digraph digraph;
};

/// Cross-checks of one digraph against the oracle. Appends the names of
/// passing checks to `passed` and failing ones to the return value.
inline std::vector<std::string> verify_instance(const Digraph& d, const VerifyOptions& opts,
                                                std::vector<std::string>& passed) {
  std::vector<std::string> failed;
  auto check = [&](const std::string& name, bool ok) { (ok ? passed : failed).push_back(name); };
  InvertibilityReport report = decide(d);
  if (opts.mutate_decide) report.invertible = !report.invertible;
  const ExactMatrix inv = inverse_b(b_matrix(d));

  check("decide-vs-exhaustive-signing", report.invertible == oracle::exhaustive_signing(inv).has_value());
  check("decide-vs-all-pairs", report.invertible == decide_all_pairs(d));
  check("inverse-vs-neumann", inv == oracle::neumann_inverse(b_matrix(d)));
  if (!report.invertible) return failed;

  const Digraph closure = parity_closure(d);
  check("double-inverse", parity_closure(closure) == d);
  bool blocks = true;
  try {
    (void)oracle::brute_inverse(lift(d));
  } catch (const std::logic_error&) {
    blocks = false;
  }
  check("block-inverse", blocks);
  if (lift(d).vertex_count() <= 24) {
    bool spectral = false;
    try {
      spectral = oracle::spectrum_reciprocal_check(lift(d), lift(closure), 1e-8);
    } catch (const oracle::EigenError&) {
      spectral = false;
    }
    check("spectral-reciprocity", spectral);
  }
  return failed;
}

inline Json verify_summary(std::uint64_t instances, const std::vector<std::string>& passed,
                           const std::vector<Mismatch>& mismatches) {
  Json checks = Json::object();
  for (const auto& name : passed) checks[name] = checks.value(name, 0) + 1;
  Json out{{"instances", instances}, {"checks", checks}, {"mismatches", mismatches.size()}};
  if (!mismatches.empty()) {
    // Smallest counterexample: fewest arcs, then lowest index.
    const auto best = std::min_element(mismatches.begin(), mismatches.end(), [](const auto& a, const auto& b) {
      const Integer ca = a.digraph.arc_count(), cb = b.digraph.arc_count();
      return ca != cb ? ca < cb : a.index < b.index;
    });
    out["counterexample"] = Json{{"index", best->index}, {"check", best->check}, {"digraph", digraph_json(best->digraph)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

inline CommandOutcome run_verify(const std::string& text, const VerifyOptions& opts = {}) {
  LoadedInput in;
  try {
    in = load_input(text);
  } catch (const std::exception& e) {
    return input_error(e);
  }
  if (in.digraph.size() > 12) return {1, "", "verify is limited to 12 columns\n"};
  std::vector<std::string> passed;
  std::vector<Mismatch> mismatches;
  for (const auto& name : verify_instance(in.digraph, opts, passed)) mismatches.push_back({0, name, in.digraph});
  if (in.graph) {
    if (oracle::enumerate_matchings(*in.graph) == 1)
      passed.push_back("unique-matching");
    else
      mismatches.push_back({0, "unique-matching", in.digraph});
  }
  Json out = verify_summary(1, passed, mismatches);
  out["provenance"] = provenance("verify");
  if (!mismatches.empty()) return {2, dump(out), "verification failed: " + mismatches.front().check + "\n"};
  return {0, dump(out), ""};
}

inline constexpr std::uint64_t kMaxVerifyInstances = 100000;

/// Shards instance indices round-robin over `jobs` threads and merges the
/// results by index, so the report does not depend on the job count.
inline CommandOutcome run_verify_exhaustive(int n, int max_mult, const VerifyOptions& opts = {}) {
  std::optional<oracle::DigraphEnumeration> family;
  try {
    family.emplace(n, max_mult);
  } catch (const oracle::OracleError& e) {
    return {1, "", std::string(e.what()) + "\n"};
  }
  if (family->size() > kMaxVerifyInstances) return {1, "", "instance space too large for exhaustive verify\n"};
  if (opts.jobs < 1) return {1, "", "--jobs must be positive\n"};

  const std::uint64_t total = family->size();
  std::vector<std::vector<std::string>> passed(static_cast<std::size_t>(opts.jobs));
  std::vector<std::vector<Mismatch>> found(static_cast<std::size_t>(opts.jobs));
  auto worker = [&](int shard) {
    for (std::uint64_t k = static_cast<std::uint64_t>(shard); k < total; k += static_cast<std::uint64_t>(opts.jobs)) {
      const Digraph d = family->at(k);
      for (const auto& name : verify_instance(d, opts, passed[shard])) found[shard].push_back({k, name, d});
    }
  };
  if (opts.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < opts.jobs; ++s) threads.emplace_back(worker, s);
    for (auto& th : threads) th.join();
  }
  std::vector<std::string> all_passed;
  std::vector<Mismatch> mismatches;
  for (int s = 0; s < opts.jobs; ++s) {
    all_passed.insert(all_passed.end(), passed[s].begin(), passed[s].end());
    mismatches.insert(mismatches.end(), found[s].begin(), found[s].end());
  }
  std::sort(mismatches.begin(), mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return a.index != b.index ? a.index < b.index : a.check < b.check; });
  std::sort(all_passed.begin(), all_passed.end());
  Json out = verify_summary(total, all_passed, mismatches);
  out["provenance"] = provenance("verify");
  if (!mismatches.empty()) return {2, dump(out), "verification failed on " + std::to_string(mismatches.size()) + " checks\n"};
  return {0, dump(out), ""};
}

}  // namespace ginv::cli

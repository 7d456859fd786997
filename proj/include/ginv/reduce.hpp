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

/// \file reduce.hpp
/// \brief Reduction of a bipartite multigraph with a unique perfect matching
/// to its associated digraph, and the inverse lifting.

#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginv/graph.hpp"

namespace ginv {

class ReductionError : public std::runtime_error {
 public:
  enum class Kind { NotBipartite, NoPerfectMatching, MatchingNotUnique, ParallelMatchingEdge };

  explicit ReductionError(Kind kind) : std::runtime_error(describe(kind)), kind_(kind) {}
  Kind kind() const { return kind_; }

  static std::string describe(Kind kind) {
    switch (kind) {
      case Kind::NotBipartite: return "graph is not bipartite";
      case Kind::NoPerfectMatching: return "graph has no perfect matching";
      case Kind::MatchingNotUnique: return "perfect matching not unique";
      case Kind::ParallelMatchingEdge: return "matching edge has a parallel copy";
    }
    return "reduction failed";
  }

 private:
  Kind kind_;
};

enum class Side { Bottom, Top };

/// Column and side assigned to one original vertex.
struct Placement {
  int column = 0;
  Side side = Side::Bottom;
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Map from original vertex label (1-based) to its placement.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Placement> placements) : placements_(std::move(placements)) {}

  int vertex_count() const { return static_cast<int>(placements_.size()); }
  const Placement& at(int vertex) const { return placements_.at(static_cast<std::size_t>(vertex - 1)); }

  /// Original vertex sitting at (column, side).
  int vertex_at(int column, Side side) const {
    for (int v = 1; v <= vertex_count(); ++v)
      if (at(v).column == column && at(v).side == side) return v;
    throw std::out_of_range("no vertex at column " + std::to_string(column));
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Placement> placements_;
};

struct Reduction {
  MatchedBipartiteGraph graph;
  Digraph digraph;
  Labeling labeling;
};

namespace detail {

// Kuhn's augmenting paths; only used to tell "no matching" from "several".
inline bool has_perfect_matching(const std::vector<std::vector<int>>& adj, const std::vector<int>& left,
                                 const std::vector<int>& right, int vertex_count) {
  if (left.size() != right.size()) return false;
  std::vector<int> match(static_cast<std::size_t>(vertex_count) + 1, 0);
  std::vector<char> in_right(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (int r : right) in_right[r] = 1;
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int u) {
    for (int w : adj[u]) {
      if (!in_right[w] || seen[w]) continue;
      seen[w] = 1;
      if (match[w] == 0 || augment(match[w])) {
        match[w] = u;
        return true;
      }
    }
    return false;
  };
  for (int u : left) {
    seen.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    if (!augment(u)) return false;
  }
  return true;
}

}  // namespace detail

/// Validates `g` (bipartite, unique perfect matching, simple matching edges)
/// and emits its associated digraph. Columns are topologically sorted; among
/// columns that are ready at the same time, the one holding the smallest
/// original vertex label comes first. In each connected component the colour
/// class of the smallest label forms the bottom row.
inline Reduction reduce(const Multigraph& g) {
  const int V = g.vertex_count();
  if (V < 1) throw PreconditionError("reduce requires a nonempty graph");
  using Kind = ReductionError::Kind;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(V) + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  // Two-colouring, component roots in increasing label order.
  std::vector<int> color(static_cast<std::size_t>(V) + 1, -1);
  for (int root = 1; root <= V; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          throw ReductionError(Kind::NotBipartite);
        }
      }
    }
  }

  // Pendant elimination on the underlying simple graph.
  std::vector<int> degree(static_cast<std::size_t>(V) + 1);
  std::vector<char> alive(static_cast<std::size_t>(V) + 1, 1);
  std::vector<int> mate(static_cast<std::size_t>(V) + 1, 0);
  std::set<int> pendant;
  for (int u = 1; u <= V; ++u) {
    degree[u] = static_cast<int>(adj[u].size());
    if (degree[u] == 0) throw ReductionError(Kind::NoPerfectMatching);
    if (degree[u] == 1) pendant.insert(u);
  }
  int remaining = V;
  while (!pendant.empty()) {
    int u = *pendant.begin();
    pendant.erase(pendant.begin());
    if (!alive[u]) continue;
    int w = 0;
    for (int x : adj[u])
      if (alive[x]) w = x;
    if (w == 0) throw ReductionError(Kind::NoPerfectMatching);
    mate[u] = w;
    mate[w] = u;
    alive[u] = alive[w] = 0;
    remaining -= 2;
    pendant.erase(w);
    for (int x : adj[w]) {
      if (!alive[x]) continue;
      if (--degree[x] == 0) throw ReductionError(Kind::NoPerfectMatching);
      if (degree[x] == 1) pendant.insert(x);
    }
  }
  if (remaining > 0) {
    std::vector<int> left, right;
    std::vector<std::vector<int>> rest(static_cast<std::size_t>(V) + 1);
    for (int u = 1; u <= V; ++u) {
      if (!alive[u]) continue;
      (color[u] == 0 ? left : right).push_back(u);
      for (int x : adj[u])
        if (alive[x]) rest[u].push_back(x);
    }
    throw ReductionError(detail::has_perfect_matching(rest, left, right, V) ? Kind::MatchingNotUnique
                                                                           : Kind::NoPerfectMatching);
  }
  for (int u = 1; u <= V; ++u)
    if (u < mate[u] && g.multiplicity(u, mate[u]) != 1) throw ReductionError(Kind::ParallelMatchingEdge);

  // Provisional columns, keyed by their bottom vertex.
  const int n = V / 2;
  std::vector<int> provisional(static_cast<std::size_t>(V) + 1, 0);
  std::vector<int> bottom_of, top_of;
  for (int u = 1; u <= V; ++u) {
    if (color[u] != 0) continue;
    provisional[u] = provisional[mate[u]] = static_cast<int>(bottom_of.size());
    bottom_of.push_back(u);
    top_of.push_back(mate[u]);
  }
  std::vector<std::vector<std::pair<int, Integer>>> out(static_cast<std::size_t>(n));
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    if (mate[e.u] == e.v) continue;
    int b = color[e.u] == 0 ? e.u : e.v;
    int t = color[e.u] == 0 ? e.v : e.u;
    out[provisional[b]].emplace_back(provisional[t], e.multiplicity);
    ++indegree[provisional[t]];
  }

  auto key = [&](int c) { return std::min(bottom_of[c], top_of[c]); };
  auto later = [&](int a, int b) { return key(a) > key(b); };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
  for (int c = 0; c < n; ++c)
    if (indegree[c] == 0) ready.push(c);
  std::vector<int> final_label(static_cast<std::size_t>(n), 0);
  int next = 1;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    final_label[c] = next++;
    for (const auto& [t, m] : out[c])
      if (--indegree[t] == 0) ready.push(t);
  }
  if (next != n + 1) throw std::logic_error("column order is cyclic despite a unique matching");

  Digraph d(n);
  for (int c = 0; c < n; ++c)
    for (const auto& [t, m] : out[c]) d.add_arc(final_label[c], final_label[t], m);

  std::vector<Placement> placements(static_cast<std::size_t>(V));
  for (int c = 0; c < n; ++c) {
    placements[bottom_of[c] - 1] = {final_label[c], Side::Bottom};
    placements[top_of[c] - 1] = {final_label[c], Side::Top};
  }
  return {MatchedBipartiteGraph(d), d, Labeling(std::move(placements))};
}

/// The 2n-vertex matched bipartite graph whose reduction is `d`.
inline MatchedBipartiteGraph lift(const Digraph& d) { return MatchedBipartiteGraph(d); }

/// Re-expresses a column-layout graph on the original vertex labels recorded
/// by a reduction.
inline Multigraph restore_labels(const Digraph& columns, const Labeling& labeling) {
  if (labeling.vertex_count() != 2 * columns.size())
    throw PreconditionError("labeling does not match the column count");
  std::vector<int> bottom(static_cast<std::size_t>(columns.size()) + 1), top(bottom.size());
  for (int v = 1; v <= labeling.vertex_count(); ++v) {
    const auto& p = labeling.at(v);
    (p.side == Side::Bottom ? bottom : top)[p.column] = v;
  }
  Multigraph g(labeling.vertex_count());
  for (int c = 1; c <= columns.size(); ++c) g.add_edge(bottom[c], top[c]);
  for (const auto& a : columns.arcs()) g.add_edge(bottom[a.from], top[a.to], a.multiplicity);
  return g;
}

}  // namespace ginv

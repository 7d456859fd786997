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

/// \file unicyclic.hpp
/// \brief Closed-form invertibility for digraphs with one undirected cycle.
///
/// With the cycle on consecutive vertices first..last, the original graph has
/// a cycle of length 2m and 2k matched edges incident to it; the digraph cycle
/// has m + k vertices and k sources (equivalently k sinks).

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "ginv/graph.hpp"

namespace ginv {

struct UnicyclicProfile {
  int first = 0;  ///< lowest cycle vertex, v + 1
  int last = 0;   ///< highest cycle vertex, v + m + k
  int m = 0;
  int k = 0;

  int cycle_length() const { return last - first + 1; }
  std::pair<int, int> prime_pair_candidate() const { return {first, last}; }

  friend bool operator==(const UnicyclicProfile&, const UnicyclicProfile&) = default;
};

class NotUnicyclicError : public PreconditionError {
 public:
  NotUnicyclicError() : PreconditionError("digraph is not connected-unicyclic on consecutive vertices") {}
};

/// Profile of a connected unicyclic digraph whose cycle occupies consecutive
/// labels; nothing otherwise. A doubled arc counts as a cycle of length 2.
inline std::optional<UnicyclicProfile> analyze(const Digraph& d) {
  const int n = d.size();
  if (n < 2 || d.arc_count() != n) return std::nullopt;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : d.arcs()) {
    const int m = static_cast<int>(a.multiplicity);
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
    degree[a.from] += m;
    degree[a.to] += m;
  }

  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> queue{1};
  seen[1] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n) return std::nullopt;

  // Connected with n edges: peeling leaves leaves exactly the cycle.
  std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> leaves;
  for (int u = 1; u <= n; ++u)
    if (degree[u] == 1) leaves.push_back(u);
  while (!leaves.empty()) {
    int u = leaves.front();
    leaves.pop_front();
    removed[u] = 1;
    for (int w : adj[u])
      if (!removed[w] && --degree[w] == 1) leaves.push_back(w);
  }

  std::vector<int> cycle;
  for (int u = 1; u <= n; ++u)
    if (!removed[u]) cycle.push_back(u);
  if (cycle.size() < 2 || cycle.back() - cycle.front() + 1 != static_cast<int>(cycle.size())) return std::nullopt;

  const int first = cycle.front();
  const int last = cycle.back();
  int extremes = 0;
  for (int u : cycle) {
    bool in = false, out = false;
    for (int w : adj[u]) {
      if (w < first || w > last) continue;
      (w < u ? in : out) = true;
    }
    if (!in || !out) ++extremes;
  }
  UnicyclicProfile profile;
  profile.first = first;
  profile.last = last;
  profile.k = extremes / 2;
  profile.m = profile.cycle_length() - profile.k;
  return profile;
}

struct UnicyclicVerdict {
  bool invertible = false;
  bool simply_invertible = false;

  friend bool operator==(const UnicyclicVerdict&, const UnicyclicVerdict&) = default;
};

/// Invertible iff the cycle length m + k is even, or k = 1 and the two cycle
/// extremes are adjacent; simply invertible iff in addition k > 1 or m + k is
/// odd.
inline UnicyclicVerdict decide_unicyclic(const Digraph& d) {
  const auto profile = analyze(d);
  if (!profile) throw NotUnicyclicError();
  const bool even = profile->cycle_length() % 2 == 0;
  UnicyclicVerdict verdict;
  verdict.invertible = even || (profile->k == 1 && d.has_arc(profile->first, profile->last));
  verdict.simply_invertible = verdict.invertible && (profile->k > 1 || !even);
  return verdict;
}

}  // namespace ginv

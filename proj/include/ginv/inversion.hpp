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

/// \file inversion.hpp
/// \brief Derived constructions on a digraph: the parity closure D+, the
/// maximal-path subgraph Gamma, the Delta subgraph and signings of B^-1.

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "ginv/graph.hpp"
#include "ginv/matrix.hpp"
#include "ginv/paths.hpp"
#include "ginv/reduce.hpp"

namespace ginv {

/// D+ : |B^-1(i,j)| parallel arcs i -> j for every i < j.
inline Digraph parity_closure(const Digraph& d) {
  const ExactMatrix inv = inverse_b(b_matrix(d));
  Digraph out(d.size());
  for (int i = 1; i <= d.size(); ++i)
    for (int j = i + 1; j <= d.size(); ++j)
      if (inv(i, j) != 0) out.set_multiplicity(i, j, boost::multiprecision::abs(inv(i, j)));
  return out;
}

/// G+ for a graph in column layout; same matching, same bipartition.
inline MatchedBipartiteGraph parity_closure_graph(const MatchedBipartiteGraph& g) {
  return lift(parity_closure(g.digraph()));
}

/// Maximal-path subgraph: keeps an arc (all its copies) exactly when no
/// longer path joins its endpoints.
inline Digraph gamma(const Digraph& d, const LongestPaths& longest) {
  Digraph out(d.size());
  for (const auto& a : d.arcs())
    if (longest(a.from, a.to) == 1) out.set_multiplicity(a.from, a.to, a.multiplicity);
  return out;
}

inline Digraph gamma(const Digraph& d) { return gamma(d, LongestPaths(d)); }

/// Arcs whose endpoints have an odd longest-path length.
inline Digraph delta(const Digraph& d, const LongestPaths& longest) {
  Digraph out(d.size());
  for (const auto& a : d.arcs())
    if (longest.pairing(a.from, a.to) == -1) out.set_multiplicity(a.from, a.to, a.multiplicity);
  return out;
}

inline Digraph delta(const Digraph& d) { return delta(d, LongestPaths(d)); }

/// Proper 2-colouring of the underlying undirected graph (colours 0/1, the
/// lowest label of each component gets 0), or nothing if an odd cycle exists.
inline std::optional<std::vector<int>> two_coloring(const Digraph& d) {
  const int n = d.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& a : d.arcs()) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  for (int root = 1; root <= n; ++root) {
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
          return std::nullopt;
        }
      }
    }
  }
  color.erase(color.begin());
  return color;
}

inline bool is_bipartite(const Digraph& d) { return two_coloring(d).has_value(); }

/// Diagonal +-1 matrix S, stored as its diagonal.
class Signing {
 public:
  Signing() = default;
  explicit Signing(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("signing entries must be +1 or -1");
  }

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int i) const { return signs_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return signs_; }

  /// S M S = |M| for the given square matrix.
  bool signs(const ExactMatrix& m) const {
    if (m.size() != size()) return false;
    for (int i = 1; i <= m.size(); ++i)
      for (int j = 1; j <= m.size(); ++j) {
        const Integer& x = m(i, j);
        if (x == 0) continue;
        if ((x > 0) != ((*this)[i] == (*this)[j])) return false;
      }
    return true;
  }

  friend bool operator==(const Signing&, const Signing&) = default;

 private:
  std::vector<int> signs_;
};

/// Sign-constraint propagation: every nonzero off-diagonal entry demands
/// s_i s_j = sign(B^-1(i,j)). The lowest vertex of each constraint component
/// is fixed to +1. Returns nothing when the constraints are inconsistent.
inline std::optional<Signing> find_signing(const ExactMatrix& inv) {
  const int n = inv.size();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int sign = inv(i, j).sign();
      if (sign == 0) continue;
      adj[i].emplace_back(j, sign);
      adj[j].emplace_back(i, sign);
    }
  std::vector<int> s(static_cast<std::size_t>(n) + 1, 0);
  for (int root = 1; root <= n; ++root) {
    if (s[root] != 0) continue;
    s[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [w, sign] : adj[u]) {
        const int want = s[u] * sign;
        if (s[w] == 0) {
          s[w] = want;
          queue.push_back(w);
        } else if (s[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  s.erase(s.begin());
  return Signing(std::move(s));
}

/// D++ == D.
inline bool is_reflexive(const Digraph& d) { return parity_closure(parity_closure(d)) == d; }

}  // namespace ginv

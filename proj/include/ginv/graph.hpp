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

/// \file graph.hpp
/// \brief Core value types: undirected multigraphs, associated digraphs and
/// matched bipartite graphs in column layout.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ginv {

/// Unbounded exact integer used for every multiplicity and path count.
using Integer = boost::multiprecision::cpp_int;

/// A directed arc `from -> to` carrying a positive multiplicity.
struct Arc {
  int from = 0;
  int to = 0;
  Integer multiplicity = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// An undirected edge `u -- v` (u < v) carrying a positive multiplicity.
struct Edge {
  int u = 0;
  int v = 0;
  Integer multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph on vertices 1..n whose arcs all run from a lower to a
/// higher label. Adjacency matrix is B - I for an upper uni-triangular B.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), mult_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::invalid_argument("digraph size must be nonnegative");
  }

  Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
    for (auto [i, j] : arcs) add_arc(i, j);
  }

  int size() const { return n_; }

  /// Multiplicity of i -> j; zero for absent arcs and for i >= j.
  const Integer& multiplicity(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i >= j) return zero();
    return mult_[index(i, j)];
  }

  bool has_arc(int i, int j) const { return multiplicity(i, j) != 0; }

  void add_arc(int i, int j, const Integer& m = 1) {
    check_arc(i, j);
    if (m < 0) throw std::invalid_argument("arc multiplicity must be nonnegative");
    mult_[index(i, j)] += m;
  }

  void set_multiplicity(int i, int j, const Integer& m) {
    check_arc(i, j);
    if (m < 0) throw std::invalid_argument("arc multiplicity must be nonnegative");
    mult_[index(i, j)] = m;
  }

  /// Removes `m` copies of i -> j; throws if fewer are present.
  void remove_arc(int i, int j, const Integer& m = 1) {
    check_arc(i, j);
    auto& cell = mult_[index(i, j)];
    if (cell < m) throw std::invalid_argument("cannot remove more copies than present");
    cell -= m;
  }

  /// Arcs sorted lexicographically by (from, to).
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (const auto& m = mult_[index(i, j)]; m != 0) out.push_back({i, j, m});
    return out;
  }

  /// Total number of arcs counted with multiplicity.
  Integer arc_count() const {
    Integer total = 0;
    for (const auto& m : mult_) total += m;
    return total;
  }

  /// True when every multiplicity is at most one.
  bool is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](const Integer& m) { return m <= 1; });
  }

  /// Induced subgraph on vertices 1..k.
  Digraph prefix(int k) const {
    if (k < 0 || k > n_) throw std::out_of_range("prefix size out of range");
    Digraph out(k);
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) out.mult_[out.index(i, j)] = mult_[index(i, j)];
    return out;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

  /// Arc-wise containment with multiplicities: every arc of `*this` appears in
  /// `other` at least as often.
  bool is_subgraph_of(const Digraph& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t k = 0; k < mult_.size(); ++k)
      if (mult_[k] > other.mult_[k]) return false;
    return true;
  }

 private:
  static const Integer& zero() {
    static const Integer z = 0;
    return z;
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }
  void check_vertex(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("vertex " + std::to_string(i) + " out of range");
  }
  void check_arc(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i >= j)
      throw std::invalid_argument("arc " + std::to_string(i) + "->" + std::to_string(j) +
                                  " does not run from a lower to a higher label");
  }

  int n_ = 0;
  std::vector<Integer> mult_;
};

/// Undirected loopless multigraph on vertices 1..V.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  }

  Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
      : Multigraph(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return vertex_count_; }

  void add_edge(int u, int v, const Integer& m = 1) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (m <= 0) throw std::invalid_argument("edge multiplicity must be positive");
    edges_[key(u, v)] += m;
  }

  Integer multiplicity(int u, int v) const {
    if (u == v) return 0;
    auto it = edges_.find(key(u, v));
    return it == edges_.end() ? Integer(0) : it->second;
  }

  /// Edges sorted lexicographically with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [k, m] : edges_) out.push_back({k.first, k.second, m});
    return out;
  }

  /// Neighbours of u with the multiplicity of each connecting edge.
  std::vector<std::pair<int, Integer>> neighbors(int u) const {
    check_vertex(u);
    std::vector<std::pair<int, Integer>> out;
    for (const auto& [k, m] : edges_) {
      if (k.first == u) out.emplace_back(k.second, m);
      else if (k.second == u) out.emplace_back(k.first, m);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  static std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }
  void check_vertex(int u) const {
    if (u < 1 || u > vertex_count_)
      throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
  }

  int vertex_count_ = 0;
  std::map<std::pair<int, int>, Integer> edges_;
};

/// Bipartite graph on 2n vertices in column layout: bottom vertex i is
/// matched to top vertex n + i, and an off-diagonal entry (i, j), i < j,
/// counts edges between bottom i and top n + j. The bipartite block B of the
/// adjacency matrix is therefore upper uni-triangular.
class MatchedBipartiteGraph {
 public:
  MatchedBipartiteGraph() = default;
  explicit MatchedBipartiteGraph(Digraph columns) : columns_(std::move(columns)) {}

  int columns() const { return columns_.size(); }
  int vertex_count() const { return 2 * columns_.size(); }
  static int bottom(int column) { return column; }
  int top(int column) const { return columns_.size() + column; }

  const Integer& off_diagonal(int i, int j) const { return columns_.multiplicity(i, j); }

  /// The associated digraph (columns collapsed to vertices).
  const Digraph& digraph() const { return columns_; }

  /// The full undirected multigraph with the paper-style labeling.
  Multigraph to_multigraph() const {
    const int n = columns_.size();
    Multigraph g(2 * n);
    for (int i = 1; i <= n; ++i) g.add_edge(bottom(i), top(i));
    for (const auto& a : columns_.arcs()) g.add_edge(bottom(a.from), top(a.to), a.multiplicity);
    return g;
  }

  friend bool operator==(const MatchedBipartiteGraph&, const MatchedBipartiteGraph&) = default;

 private:
  Digraph columns_;
};

/// Thrown when a caller violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ginv

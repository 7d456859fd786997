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

/// \file paths.hpp
/// \brief Path counting over an associated digraph.
///
/// B^-1(i,j) equals the number of even-length minus the number of odd-length
/// directed paths from i to j, each path weighted by the product of its arc
/// multiplicities. All arcs run low -> high, so every dynamic programme below
/// sweeps vertices in label order.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginv/graph.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

/// B = I + adjacency(d).
inline ExactMatrix b_matrix(const Digraph& d) {
  ExactMatrix b = ExactMatrix::identity(d.size());
  for (const auto& a : d.arcs()) b(a.from, a.to) = a.multiplicity;
  return b;
}

/// Exact inverse of an upper uni-triangular matrix by back-substitution.
inline ExactMatrix inverse_b(const ExactMatrix& b) {
  if (!b.is_unitriangular()) throw PreconditionError("inverse_b requires an upper uni-triangular matrix");
  const int n = b.size();
  ExactMatrix x(n);
  // Row i of B X = I gives X(i,j) = delta(i,j) - sum_{k>i} B(i,k) X(k,j).
  for (int i = n; i >= 1; --i) {
    for (int j = i; j <= n; ++j) {
      Integer value = i == j ? 1 : 0;
      for (int k = i + 1; k <= j; ++k)
        if (b(i, k) != 0) value -= b(i, k) * x(k, j);
      x(i, j) = std::move(value);
    }
  }
  return x;
}

namespace detail {

inline void check_pair(const Digraph& d, int i, int j) {
  if (i < 1 || j < 1 || i > d.size() || j > d.size())
    throw std::out_of_range("vertex pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
}

// Signed path count i ~> j in d with the vertices flagged in `skip` removed.
inline Integer signed_count_avoiding(const Digraph& d, int i, int j, const std::vector<char>& skip) {
  if (i > j) return 0;
  if (i == j) return 1;
  std::vector<Integer> s(static_cast<std::size_t>(j - i + 1));
  s[0] = 1;
  for (int v = i + 1; v <= j; ++v) {
    if (!skip.empty() && skip[v]) continue;
    Integer acc = 0;
    for (int u = i; u < v; ++u) {
      if (s[u - i] == 0) continue;
      if (const auto& m = d.multiplicity(u, v); m != 0) acc -= s[u - i] * m;
    }
    s[v - i] = std::move(acc);
  }
  return s[j - i];
}

}  // namespace detail

/// Sum over all i ~> j paths of (-1)^length, computed by a forward sweep from
/// i; 1 when i == j and 0 when i > j.
inline Integer signed_path_count(const Digraph& d, int i, int j) {
  detail::check_pair(d, i, j);
  return detail::signed_count_avoiding(d, i, j, {});
}

/// Even/odd path counts and the longest path length from i to j.
struct PathStats {
  Integer even_count = 0;
  Integer odd_count = 0;
  std::optional<int> max_length;  ///< empty when no path exists

  Integer total() const { return even_count + odd_count; }
  Integer signed_count() const { return even_count - odd_count; }
};

inline PathStats path_stats(const Digraph& d, int i, int j) {
  detail::check_pair(d, i, j);
  if (i >= j) throw PreconditionError("path_stats requires i < j");
  const std::size_t span = static_cast<std::size_t>(j - i + 1);
  std::vector<Integer> even(span), odd(span);
  std::vector<int> longest(span, -1);
  even[0] = 1;
  longest[0] = 0;
  for (int v = i + 1; v <= j; ++v) {
    for (int u = i; u < v; ++u) {
      if (longest[u - i] < 0) continue;
      const auto& m = d.multiplicity(u, v);
      if (m == 0) continue;
      even[v - i] += odd[u - i] * m;
      odd[v - i] += even[u - i] * m;
      longest[v - i] = std::max(longest[v - i], longest[u - i] + 1);
    }
  }
  PathStats stats{even[span - 1], odd[span - 1], std::nullopt};
  if (longest[span - 1] >= 0) stats.max_length = longest[span - 1];
  return stats;
}

/// Longest-path lengths between all ordered pairs; -1 marks "no path" and the
/// diagonal is 0.
class LongestPaths {
 public:
  explicit LongestPaths(const Digraph& d) : n_(d.size()), len_(static_cast<std::size_t>(n_) * n_, -1) {
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n_) + 1);
    for (const auto& a : d.arcs()) preds[a.to].push_back(a.from);
    for (int i = 1; i <= n_; ++i) {
      at(i, i) = 0;
      for (int v = i + 1; v <= n_; ++v) {
        int best = -1;
        for (int u : preds[v])
          if (u >= i && at(i, u) >= 0) best = std::max(best, at(i, u) + 1);
        at(i, v) = best;
      }
    }
  }

  int size() const { return n_; }
  int operator()(int i, int j) const { return len_[idx(i, j)]; }
  bool reaches(int i, int j) const { return (*this)(i, j) >= 0; }

  /// (-1)^length of a longest i ~> j path, 0 without a path.
  int pairing(int i, int j) const {
    int l = (*this)(i, j);
    if (l < 0) return 0;
    return l % 2 == 0 ? 1 : -1;
  }

  /// Longest path length over all pairs.
  int max_length() const {
    int best = 0;
    for (int l : len_) best = std::max(best, l);
    return best;
  }

 private:
  int& at(int i, int j) { return len_[idx(i, j)]; }
  std::size_t idx(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("vertex out of range");
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<int> len_;
};

/// The pairing <i,j>: (-1)^(longest i ~> j path length), 0 if no path,
/// +1 for i == j.
inline int pairing(const Digraph& d, int i, int j) {
  detail::check_pair(d, i, j);
  if (i > j) throw PreconditionError("pairing requires i <= j");
  if (i == j) return 1;
  auto stats = path_stats(d, i, j);
  if (!stats.max_length) return 0;
  return *stats.max_length % 2 == 0 ? 1 : -1;
}

/// Entry (i,j) of the inverse of B for d with vertex k deleted (labels kept).
inline Integer deletion_entry(const Digraph& d, int k, int i, int j) {
  detail::check_pair(d, i, j);
  detail::check_pair(d, k, k);
  if (!(i < k && k < j)) throw PreconditionError("deletion_entry requires i < k < j");
  std::vector<char> skip(static_cast<std::size_t>(d.size()) + 1, 0);
  skip[k] = 1;
  return detail::signed_count_avoiding(d, i, j, skip);
}

/// Reachability i ~> j avoiding the flagged vertices (i and j themselves are
/// never skipped).
inline bool reaches_avoiding(const Digraph& d, int i, int j, const std::vector<char>& skip) {
  if (i == j) return true;
  if (i > j) return false;
  std::vector<char> seen(static_cast<std::size_t>(d.size()) + 1, 0);
  seen[i] = 1;
  for (int v = i + 1; v <= j; ++v) {
    if (v != j && !skip.empty() && skip[v]) continue;
    for (int u = i; u < v && !seen[v]; ++u)
      if (seen[u] && d.has_arc(u, v)) seen[v] = 1;
  }
  return seen[j];
}

}  // namespace ginv

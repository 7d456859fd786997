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

// Shared helpers for the test binaries: random instances and the small
// exhaustive families used by the property tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ginv/ginv.hpp"

namespace ginv::testing {

/// Random digraph: each pair gets an arc with probability `density`, with
/// multiplicity uniform in [1, max_mult].
inline Digraph random_digraph(std::mt19937_64& rng, int n, double density, int max_mult = 1) {
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<int> mult(1, max_mult);
  Digraph d(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) d.set_multiplicity(i, j, mult(rng));
  return d;
}

/// Relabels the vertices of g by a random permutation; perm[v-1] is the new
/// label of v.
inline Multigraph permute(const Multigraph& g, const std::vector<int>& perm) {
  Multigraph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u - 1], perm[e.v - 1], e.multiplicity);
  return out;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// The two exhaustive families used throughout: all simple digraphs on 5
/// vertices, then all digraphs on 4 vertices with multiplicity at most 2.
template <class F>
void for_each_reference_digraph(F&& f) {
  oracle::enumerate_digraphs(5, 1).for_each(f);
  oracle::enumerate_digraphs(4, 2).for_each(f);
}

/// Every digraph with n <= 5 (simple) or n <= 4 (multiplicity <= 2).
template <class F>
void for_each_small_digraph(F&& f) {
  for (int n = 1; n <= 5; ++n) oracle::enumerate_digraphs(n, 1).for_each(f);
  for (int n = 2; n <= 4; ++n) oracle::enumerate_digraphs(n, 2).for_each(f);
}

inline std::vector<std::pair<int, int>> arc_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : d.arcs()) out.emplace_back(a.from, a.to);
  return out;
}

}  // namespace ginv::testing

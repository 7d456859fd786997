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

/// \file fixtures.hpp
/// \brief Reference digraphs used throughout the test-suite and samples.

#include "ginv/graph.hpp"

namespace ginv::fixtures {

/// Simply invertible; prime pairs (1,4) and (1,6).
inline Digraph fix_a() {
  return Digraph(6, {{1, 2}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {2, 4}, {1, 4}, {1, 6}});
}

/// Not invertible: the prime pair (1,5) has value -1.
inline Digraph fix_b() { return Digraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {1, 5}}); }

/// Invertible but not simply: |B^-1(1,4)| = 2.
inline Digraph fix_c() {
  return Digraph(6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 6}, {1, 4}, {1, 6}});
}

/// Reflexive (D++ = D) yet not invertible.
inline Digraph fix_refl() {
  return Digraph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {1, 5}, {1, 6}, {3, 5}, {3, 6}});
}

/// Not invertible although its Delta subgraph is bipartite.
inline Digraph fix_delta() {
  return Digraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {1, 3}, {2, 4}});
}

/// Invertible via the prime chain (1,3), (4,6).
inline Digraph fix_chain() {
  return Digraph(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {3, 6}, {1, 4}, {2, 5}, {1, 3}, {4, 6}});
}

/// Unicyclic with cycle on 4..8, m = 4, k = 1.
inline Digraph fix_uni() {
  return Digraph(8, {{3, 4}, {4, 5}, {5, 6}, {7, 8}, {2, 6}, {6, 8}, {1, 6}, {4, 7}});
}

/// Directed tree whose inverse is its transitive closure.
inline Digraph directed_tree() { return Digraph(6, {{1, 2}, {3, 4}, {4, 5}, {5, 6}, {2, 6}}); }

/// The 12-vertex bipartite graph whose associated digraph is fix_c(), with
/// bottom row 1..6 and top row 7..12.
inline Multigraph fix_c_graph() {
  Multigraph g(12, {{5, 12}, {2, 12}, {12, 1}, {1, 10}, {2, 9}, {3, 10}, {8, 1},
                    {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}});
  return g;
}

}  // namespace ginv::fixtures

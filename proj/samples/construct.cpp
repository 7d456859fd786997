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


// Grows a digraph one vertex at a time, keeping it invertible, then builds a
// unicyclic digraph from degree and Motzkin partitions and prints both
// inverses.

#include <iostream>

#include "ginv/ginv.hpp"

int main() {
  using namespace ginv;

  // Start from a path and attach new vertices while the extension stays
  // invertible; a failing pair is repaired by adding parallel arcs.
  Digraph d(3, {{1, 2}, {2, 3}});
  d.add_arc(1, 3);
  std::cout << "base:\n" << format_graph(d);
  if (!pair_rule(d, 2, 3)) {
    const Reinforcement fix = reinforce(d, 2, 3);
    std::cout << "pair (2,3) needs " << fix.k << " extra arc(s), bound " << fix.bound << "\n";
    d = fix.reinforced;
  }
  d = extend(d, {2, 3});
  const InvertibilityReport report = decide(d);
  std::cout << "extended:\n" << format_graph(d) << "invertible: " << report.invertible << "\n";
  if (report.inverse) std::cout << "inverse:\n" << format_graph(*report.inverse);

  // A unicyclic digraph on 8 vertices with its cycle on 3..7.
  ScriptedChooser choices({0, 1, 6});
  const UnicyclicBuild built =
      build_unicyclic(8, 5, 2, {0, 1, 0, 0, 2, 2, 2, 1}, MotzkinPartition({0, 0, 2, 1, 2}), choices);
  const auto profile = analyze(built.digraph);
  std::cout << "unicyclic:\n" << format_graph(built.digraph);
  std::cout << "m = " << profile->m << ", k = " << profile->k
            << ", invertible: " << decide_unicyclic(built.digraph).invertible << "\n";
  return 0;
}

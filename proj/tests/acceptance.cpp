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


// Acceptance run: one PASS/FAIL line per criterion, thresholds fixed below.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ginv/fixtures.hpp"
#include "ginv/ginv.hpp"

namespace {

using namespace ginv;
using Clock = std::chrono::steady_clock;

constexpr double kExampleBudgetMs = 1.0;       // criterion 1, per example
constexpr double kEquivalenceBudgetS = 10.0;   // criterion 3
constexpr double kSpectralBudgetS = 1.0;       // criterion 10
constexpr double kSpectralTolerance = 1e-8;    // criterion 10
constexpr int kUnicyclicMaxM = 8;              // criterion 7
constexpr int kExtensionMaxN = 4;              // criterion 8

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// The criterion-3 families: 1024 simple digraphs on 5 vertices and 729
// digraphs on 4 vertices with multiplicity at most 2.
void for_each_family_member(const std::function<void(const Digraph&)>& f) {
  oracle::enumerate_digraphs(5, 1).for_each(f);
  oracle::enumerate_digraphs(4, 2).for_each(f);
}

struct Result {
  bool pass;
  std::string detail;
};

Result criterion_1() {
  using namespace fixtures;
  const InvertibilityReport a = decide(fix_a());
  const ExactMatrix inv_a = inverse_b(b_matrix(fix_a()));
  bool ok = a.invertible && a.simply_invertible && pairing(fix_a(), 1, 4) * inv_a(1, 4) == 1 && inv_a(1, 6) == 0;

  const InvertibilityReport b = decide(fix_b());
  ok = ok && !b.invertible && b.failing_pair && b.failing_pair->i == 1 && b.failing_pair->j == 5 &&
       b.failing_pair->value == -1;

  const InvertibilityReport c = decide(fix_c());
  ok = ok && c.invertible && !c.simply_invertible && boost::multiprecision::abs(inverse_b(b_matrix(fix_c()))(1, 4)) == 2;

  // Mean wall time over repeated calls, per example.
  double worst_ms = 0;
  for (const Digraph& d : {fix_a(), fix_b(), fix_c()}) {
    constexpr int kRuns = 200;
    const auto start = Clock::now();
    bool sink = false;
    for (int r = 0; r < kRuns; ++r) sink ^= decide(d).invertible;
    const double ms = seconds_since(start) * 1000.0 / kRuns;
    worst_ms = std::max(worst_ms, ms);
    (void)sink;
  }
  ok = ok && worst_ms < kExampleBudgetMs;
  char buf[96];
  std::snprintf(buf, sizeof buf, "slowest example %.4f ms (limit %.1f ms)", worst_ms, kExampleBudgetMs);
  return {ok, buf};
}

Result criterion_2() {
  Digraph expected(6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 6}, {1, 3}, {2, 4}});
  expected.add_arc(1, 4, 2);
  const bool ok = parity_closure(fixtures::fix_c()) == expected;
  return {ok, "closure of FIX_C has 1->4 with multiplicity " + parity_closure(fixtures::fix_c()).multiplicity(1, 4).str()};
}

Result criterion_3() {
  const auto start = Clock::now();
  int instances = 0, mismatches = 0;
  for_each_family_member([&](const Digraph& d) {
    ++instances;
    if (decide(d).invertible != oracle::exhaustive_signing(inverse_b(b_matrix(d))).has_value()) ++mismatches;
  });
  const double s = seconds_since(start);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d instances, %d mismatches, %.3f s (limit %.0f s)", instances, mismatches, s,
                kEquivalenceBudgetS);
  return {instances == 1024 + 729 && mismatches == 0 && s < kEquivalenceBudgetS, buf};
}

Result criterion_4() {
  int invertible = 0, failures = 0;
  for_each_family_member([&](const Digraph& d) {
    if (!decide(d).invertible) return;
    ++invertible;
    if (parity_closure(parity_closure(d)) != d) ++failures;
  });
  const Digraph refl = fixtures::fix_refl();
  const bool refl_ok = is_reflexive(refl) && !decide(refl).invertible;
  return {failures == 0 && refl_ok && invertible > 0,
          std::to_string(invertible) + " invertible instances, " + std::to_string(failures) +
              " double-inverse failures; FIX_REFL reflexive and non-invertible: " + (refl_ok ? "yes" : "no")};
}

Result criterion_5() {
  int violations = 0, bipartite = 0;
  for_each_family_member([&](const Digraph& d) {
    const Digraph closure = parity_closure(d);
    const Digraph g = gamma(d);
    const bool inv = decide(d).invertible;
    if (is_bipartite(d)) {
      ++bipartite;
      if (!inv || !d.is_subgraph_of(closure)) ++violations;
    }
    if (!g.is_subgraph_of(closure)) ++violations;
    if (inv && (!is_bipartite(g) || !is_bipartite(delta(d)))) ++violations;
  });
  const Digraph fd = fixtures::fix_delta();
  const bool converse_fails = is_bipartite(delta(fd)) && !decide(fd).invertible;
  return {violations == 0 && converse_fails && bipartite > 0,
          std::to_string(violations) + " violations over the families (" + std::to_string(bipartite) +
              " bipartite); FIX_DELTA has bipartite Delta and is non-invertible: " + (converse_fails ? "yes" : "no")};
}

Result criterion_6() {
  int inconsistent = 0, all_true = 0;
  for_each_family_member([&](const Digraph& d) {
    const BipEquivalence e = bip_equiv(d);
    if (!e.consistent()) ++inconsistent;
    all_true += e.no_long_paths;
  });
  return {inconsistent == 0, std::to_string(inconsistent) + " inconsistent instances (" + std::to_string(all_true) +
                                 " with all three conditions true)"};
}

Result criterion_7() {
  long long instances = 0, mismatches = 0;
  auto check = [&](const Digraph& d) {
    ++instances;
    const InvertibilityReport r = decide(d);
    const UnicyclicVerdict v = decide_unicyclic(d);
    if (v.invertible != r.invertible || v.simply_invertible != r.simply_invertible) ++mismatches;
  };
  check(fixtures::fix_uni());
  for (int m = 3; m <= kUnicyclicMaxM; ++m)
    for (int n = 2; n < m; ++n)
      for (int v = 1; v <= m - n; ++v)
        for (const auto& p : motzkin_enumerate(n))
          for (const auto& t : enumerate_degree_partitions(m, n, v, p)) {
            ExhaustiveChooser chooser;
            do check(build_unicyclic(m, n, v, t, p, chooser).digraph);
            while (chooser.next());
          }
  return {mismatches == 0 && instances > 1, std::to_string(instances) + " unicyclic digraphs (M <= " +
                                                std::to_string(kUnicyclicMaxM) + " and FIX_UNI), " +
                                                std::to_string(mismatches) + " mismatches"};
}

Result criterion_8() {
  int bases = 0, subsets_checked = 0, mismatches = 0, pair_mismatches = 0, reinforced = 0, over_bound = 0;
  for (int n = 1; n <= kExtensionMaxN; ++n)
    oracle::enumerate_digraphs(n, 1).for_each([&](const Digraph& d) {
      if (!decide(d).invertible) return;
      ++bases;
      for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int x = 1; x <= n; ++x)
          if (mask >> (x - 1) & 1) s.push_back(x);
        if (!valid_subset(d, s)) continue;
        ++subsets_checked;
        const bool fast = check_extension(d, s);
        if (fast != decide(extend(d, s)).invertible) ++mismatches;
        if (s.size() != 2) continue;
        if (pair_rule(d, s[0], s[1]) != fast) ++pair_mismatches;
        if (!fast) {
          ++reinforced;
          try {
            const Reinforcement r = reinforce(d, s[0], s[1]);
            if (r.k > r.bound || !decide(extend(r.reinforced, s)).invertible) ++over_bound;
          } catch (const std::exception&) {
            ++over_bound;
          }
        }
      }
    });
  return {mismatches == 0 && pair_mismatches == 0 && over_bound == 0 && subsets_checked > 0,
          std::to_string(bases) + " invertible bases, " + std::to_string(subsets_checked) + " valid subsets, " +
              std::to_string(mismatches) + " extension mismatches, " + std::to_string(pair_mismatches) +
              " pair-rule mismatches, " + std::to_string(reinforced) + " failing pairs reinforced with " +
              std::to_string(over_bound) + " over the bound"};
}

Result criterion_9() {
  const int expected[] = {1, 1, 2, 4, 9, 21};
  bool ok = true;
  std::string counts;
  for (int n = 2; n <= 7; ++n) {
    // Independent count: filter every {0,1,2}^N sequence.
    int brute = 0, total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    for (int code = 0; code < total; ++code) {
      int sum = 0, c = code;
      bool prefix_ok = true;
      for (int i = 1; i <= n; ++i, c /= 3) {
        sum += c % 3;
        if (i < n && sum >= i) prefix_ok = false;
      }
      brute += prefix_ok && sum == n;
    }
    const int fast = static_cast<int>(motzkin_enumerate(n).size());
    ok = ok && fast == brute && fast == expected[n - 2];
    counts += (counts.empty() ? "" : ", ") + std::to_string(fast);
  }
  return {ok, "counts for N = 2..7: " + counts};
}

Result criterion_10() {
  const auto start = Clock::now();
  bool ok = true;
  for (const Digraph& d : {fixtures::fix_a(), fixtures::fix_c()}) {
    const MatchedBipartiteGraph g = lift(d);
    ok = ok && oracle::spectrum_reciprocal_check(g, parity_closure_graph(g), kSpectralTolerance);
  }
  const double s = seconds_since(start);
  char buf[96];
  std::snprintf(buf, sizeof buf, "FIX_A and FIX_C at tol %.0e, %.4f s (limit %.0f s)", kSpectralTolerance, s,
                kSpectralBudgetS);
  return {ok && s < kSpectralBudgetS, buf};
}

Result criterion_11() {
  long long alg = 0, ijk = 0, failures = 0;
  int neumann = 0;
  for_each_family_member([&](const Digraph& d) {
    const int n = d.size();
    const ExactMatrix b = b_matrix(d);
    const ExactMatrix inv = inverse_b(b);
    if (oracle::neumann_inverse(b) != inv) ++failures;
    ++neumann;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        for (int k = i + 1; k < j; ++k) {
          ++alg;
          if (inv(i, j) != inv(i, k) * inv(k, j) + deletion_entry(d, k, i, j)) ++failures;
        }
    const LongestPaths longest(d);
    if (!is_bipartite(gamma(d, longest))) return;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if (longest.reaches(i, j) && longest.reaches(j, k)) {
            ++ijk;
            if (longest.pairing(i, j) * longest.pairing(j, k) != longest.pairing(i, k)) ++failures;
          }
  });
  return {failures == 0, std::to_string(alg) + " deletion identities, " + std::to_string(ijk) +
                             " pairing products, " + std::to_string(neumann) + " Neumann series, " +
                             std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria = {
      {"paper examples decided exactly", criterion_1},
      {"parity closure of FIX_C", criterion_2},
      {"decide agrees with exhaustive signing", criterion_3},
      {"double inverse and reflexive counterexample", criterion_4},
      {"bipartite and subgraph lattice", criterion_5},
      {"three-way bipartite equivalence", criterion_6},
      {"unicyclic closed form", criterion_7},
      {"construction calculus", criterion_8},
      {"Motzkin partition counts", criterion_9},
      {"spectral reciprocity", criterion_10},
      {"path identities", criterion_11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result r{false, ""};
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %zu. %s: %s\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

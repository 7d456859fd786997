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

/// \file decision.hpp
/// \brief Invertibility decision procedures.
///
/// A pair (i,j) with i < j is a zero pair when j is unreachable from i, a unit
/// pair when every i ~> j path is a single arc, composite when some i < k < j
/// lies on every i ~> j path, and prime otherwise. D is invertible exactly
/// when Gamma is bipartite and every prime pair satisfies
/// <i,j> * B^-1(i,j) >= 0; it is simply invertible when in addition Gamma is
/// simple and every such product is 0 or 1.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ginv/graph.hpp"
#include "ginv/inversion.hpp"
#include "ginv/matrix.hpp"
#include "ginv/paths.hpp"

namespace ginv {

struct PairClass {
  enum class Kind { Zero, Unit, Composite, Prime };
  Kind kind = Kind::Zero;
  int witness = 0;  ///< smallest separating vertex, Composite only

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

inline const char* to_string(PairClass::Kind kind) {
  switch (kind) {
    case PairClass::Kind::Zero: return "zero";
    case PairClass::Kind::Unit: return "unit";
    case PairClass::Kind::Composite: return "composite";
    case PairClass::Kind::Prime: return "prime";
  }
  return "?";
}

/// A pair together with <i,j>, B^-1(i,j) and their product.
struct PairValue {
  int i = 0;
  int j = 0;
  int pairing = 0;
  Integer inverse_entry = 0;
  Integer value = 0;

  friend bool operator==(const PairValue&, const PairValue&) = default;
};

struct InvertibilityReport {
  bool gamma_bipartite = false;
  bool gamma_simple = false;
  std::vector<PairValue> prime_pairs;
  bool invertible = false;
  bool simply_invertible = false;
  std::optional<Signing> signing;
  std::optional<PairValue> failing_pair;  ///< first unsignable prime pair
  std::optional<Digraph> inverse;         ///< parity closure, when invertible
};

inline PairClass classify_pair(const Digraph& d, const LongestPaths& longest, int i, int j) {
  if (!(1 <= i && i < j && j <= d.size())) throw PreconditionError("classify_pair requires 1 <= i < j <= n");
  const int l = longest(i, j);
  if (l < 0) return {PairClass::Kind::Zero, 0};
  if (l == 1) return {PairClass::Kind::Unit, 0};
  std::vector<char> skip(static_cast<std::size_t>(d.size()) + 1, 0);
  for (int k = i + 1; k < j; ++k) {
    if (!longest.reaches(i, k) || !longest.reaches(k, j)) continue;
    skip[k] = 1;
    const bool survives = reaches_avoiding(d, i, j, skip);
    skip[k] = 0;
    if (!survives) return {PairClass::Kind::Composite, k};
  }
  return {PairClass::Kind::Prime, 0};
}

inline PairClass classify_pair(const Digraph& d, int i, int j) {
  return classify_pair(d, LongestPaths(d), i, j);
}

/// Prime pairs ordered by span j - i, then by i.
inline std::vector<std::pair<int, int>> prime_pairs(const Digraph& d, const LongestPaths& longest) {
  std::vector<std::pair<int, int>> out;
  const int n = d.size();
  for (int span = 2; span < n; ++span)
    for (int i = 1; i + span <= n; ++i)
      if (classify_pair(d, longest, i, i + span).kind == PairClass::Kind::Prime) out.emplace_back(i, i + span);
  return out;
}

inline std::vector<std::pair<int, int>> prime_pairs(const Digraph& d) { return prime_pairs(d, LongestPaths(d)); }

/// Prime-pair criterion. B^-1 is computed once and shared by every pair.
inline InvertibilityReport decide(const Digraph& d) {
  InvertibilityReport report;
  const LongestPaths longest(d);
  const ExactMatrix inv = inverse_b(b_matrix(d));
  const Digraph g = gamma(d, longest);
  report.gamma_bipartite = is_bipartite(g);
  report.gamma_simple = g.is_simple();

  bool all_signable = true;
  bool all_simple = true;
  for (auto [i, j] : prime_pairs(d, longest)) {
    PairValue pv{i, j, longest.pairing(i, j), inv(i, j), 0};
    pv.value = pv.pairing * pv.inverse_entry;
    if (pv.value < 0) {
      all_signable = false;
      if (!report.failing_pair) report.failing_pair = pv;
    }
    if (pv.value > 1 || pv.value < 0) all_simple = false;
    report.prime_pairs.push_back(std::move(pv));
  }
  report.invertible = report.gamma_bipartite && all_signable;
  report.simply_invertible = report.invertible && report.gamma_simple && all_simple;
  if (report.invertible) {
    report.signing = find_signing(inv);
    if (!report.signing) throw std::logic_error("prime-pair criterion accepted an unsignable digraph");
    Digraph closure(d.size());
    for (int i = 1; i <= d.size(); ++i)
      for (int j = i + 1; j <= d.size(); ++j)
        if (inv(i, j) != 0) closure.set_multiplicity(i, j, boost::multiprecision::abs(inv(i, j)));
    report.inverse = std::move(closure);
  }
  return report;
}

/// The all-pairs criterion: Gamma bipartite and <i,j> B^-1(i,j) >= 0 for
/// every pair. Independent of the prime-pair reduction.
inline bool decide_all_pairs(const Digraph& d) {
  const LongestPaths longest(d);
  if (!is_bipartite(gamma(d, longest))) return false;
  const ExactMatrix inv = inverse_b(b_matrix(d));
  for (int i = 1; i <= d.size(); ++i)
    for (int j = i + 1; j <= d.size(); ++j)
      if (longest.pairing(i, j) * inv(i, j) < 0) return false;
  return true;
}

struct BipEquivalence {
  bool both_bipartite = false;   ///< d and d+ bipartite
  bool no_long_paths = false;    ///< no path of length > 1
  bool self_closed = false;      ///< d == d+ and d bipartite

  bool consistent() const { return both_bipartite == no_long_paths && no_long_paths == self_closed; }
};

inline BipEquivalence bip_equiv(const Digraph& d) {
  const Digraph closure = parity_closure(d);
  const bool bip = is_bipartite(d);
  return {bip && is_bipartite(closure), LongestPaths(d).max_length() <= 1, bip && closure == d};
}

/// If every matching edge of g has a pendant endpoint, returns the base graph
/// H with g the corona of H (vertex c of H is the surviving endpoint of column
/// c). Throws std::logic_error if such a g is not self-dual with bipartite D.
inline std::optional<Multigraph> corona_check(const MatchedBipartiteGraph& g) {
  const Digraph& d = g.digraph();
  const int n = d.size();
  std::vector<char> has_in(static_cast<std::size_t>(n) + 1, 0), has_out(has_in.size(), 0);
  for (const auto& a : d.arcs()) has_out[a.from] = has_in[a.to] = 1;
  for (int c = 1; c <= n; ++c)
    if (has_in[c] && has_out[c]) return std::nullopt;
  if (!(parity_closure(d) == d && is_bipartite(d)))
    throw std::logic_error("corona without a self-dual bipartite associated digraph");
  Multigraph base(n);
  for (const auto& a : d.arcs()) base.add_edge(a.from, a.to, a.multiplicity);
  return base;
}

class ChainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Greedy left-to-right chain of non-overlapping prime pairs that carry a
/// direct arc.
inline std::vector<std::pair<int, int>> auto_prime_chain(const Digraph& d) {
  std::vector<std::pair<int, int>> candidates;
  for (auto p : prime_pairs(d))
    if (d.has_arc(p.first, p.second)) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  std::vector<std::pair<int, int>> chain;
  for (auto p : candidates)
    if (chain.empty() || chain.back().second <= p.first) chain.push_back(p);
  return chain;
}

/// Sufficient test: deleting one arc i_k -> j_k per chain pair leaves a
/// bipartite digraph. A true result proves invertibility; false proves
/// nothing. An empty optional selects auto_prime_chain().
inline bool prime_chain_test(const Digraph& d, std::optional<std::vector<std::pair<int, int>>> chain = std::nullopt) {
  const auto pairs = chain ? *chain : auto_prime_chain(d);
  const LongestPaths longest(d);
  Digraph reduced = d;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (!(1 <= i && i < j && j <= d.size())) throw ChainError("chain pair " + tag + " out of range");
    if (classify_pair(d, longest, i, j).kind != PairClass::Kind::Prime)
      throw ChainError("chain pair " + tag + " is not a prime pair");
    if (!d.has_arc(i, j)) throw ChainError("chain pair " + tag + " has no direct arc");
    if (k > 0 && pairs[k - 1].second > i) throw ChainError("chain pair " + tag + " overlaps its predecessor");
    reduced.remove_arc(i, j);
  }
  return is_bipartite(reduced);
}

}  // namespace ginv

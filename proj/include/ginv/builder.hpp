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

/// \file builder.hpp
/// \brief Vertex-by-vertex construction of invertible digraphs.
///
/// D_S is D with a new last vertex n and arcs s -> n for s in S. Attachment
/// sets are multisets given as label vectors; a repeated label adds parallel
/// arcs. The second half of the file builds every connected unicyclic digraph
/// from a degree partition T and a Motzkin partition P.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ginv/decision.hpp"
#include "ginv/graph.hpp"
#include "ginv/inversion.hpp"
#include "ginv/paths.hpp"

namespace ginv {

// ---------------------------------------------------------------------------
// Single-vertex extensions

inline Digraph extend(const Digraph& d, const std::vector<int>& s) {
  const int n = d.size();
  Digraph out(n + 1);
  for (const auto& a : d.arcs()) out.set_multiplicity(a.from, a.to, a.multiplicity);
  for (int x : s) {
    if (x < 1 || x > n) throw PreconditionError("attachment vertex " + std::to_string(x) + " out of range");
    out.add_arc(x, n + 1);
  }
  return out;
}

namespace detail {

inline std::map<int, Integer> weights(const std::vector<int>& s) {
  std::map<int, Integer> w;
  for (int x : s) w[x] += 1;
  return w;
}

inline void require_invertible(const Digraph& d) {
  if (!decide(d).invertible) throw PreconditionError("base digraph is not invertible");
}

}  // namespace detail

/// Elements of S (distinct, ascending) that reach no larger element of S.
inline std::vector<int> terminals(const Digraph& d, const std::vector<int>& s) {
  const LongestPaths longest(d);
  const auto w = detail::weights(s);
  std::vector<int> out;
  for (auto it = w.begin(); it != w.end(); ++it) {
    if (it->first < 1 || it->first > d.size()) throw PreconditionError("attachment vertex out of range");
    bool terminal = true;
    for (auto jt = std::next(it); jt != w.end() && terminal; ++jt)
      if (longest.reaches(it->first, jt->first)) terminal = false;
    if (terminal) out.push_back(it->first);
  }
  return out;
}

/// S is valid when Gamma of D_S is bipartite.
inline bool valid_subset(const Digraph& d, const std::vector<int>& s) {
  detail::require_invertible(d);
  return is_bipartite(gamma(extend(d, s)));
}

namespace detail {

// The inequality test without re-validating its preconditions.
inline bool extension_inequalities(const Digraph& d, const std::vector<int>& s) {
  const int n = d.size();
  const Digraph ds = extend(d, s);
  const LongestPaths longest_s(ds);
  const LongestPaths longest(d);
  const ExactMatrix inv = inverse_b(b_matrix(d));
  const auto w = weights(s);
  for (int x = 1; x <= n; ++x) {
    Integer negative = 0, positive = 0;
    int distinct = 0;
    for (const auto& [t, mult] : w) {
      if (t < x || !longest.reaches(x, t)) continue;
      ++distinct;
      Integer term = mult * boost::multiprecision::abs(inv(x, t));
      (longest_s.pairing(t, n + 1) == -1 ? negative : positive) += term;
    }
    if (distinct >= 2 && negative < positive) return false;
  }
  return true;
}

}  // namespace detail

/// For every x with at least two elements of S_x = {s in S : x ~> s}
/// (x itself included), the |B^-1(x,s)| mass on the <s,n> = -1 side must
/// dominate the mass on the +1 side. Multiplicities weight the sums.
inline bool check_extension(const Digraph& d, const std::vector<int>& s) {
  if (!valid_subset(d, s)) throw PreconditionError("attachment set is not valid");
  return detail::extension_inequalities(d, s);
}

/// Two-element shortcut: D_{s,s'} fails only when <s,s'> = -1, s ~> s', and
/// some x ~> s (x = s included) has |B^-1(x,s')| < |B^-1(x,s)|.
inline bool pair_rule(const Digraph& d, int s, int t) {
  if (s == t) throw PreconditionError("pair_rule needs two distinct vertices");
  if (s > t) std::swap(s, t);
  detail::check_pair(d, s, t);
  const LongestPaths longest(d);
  if (longest.pairing(s, t) != -1) return true;
  const ExactMatrix inv = inverse_b(b_matrix(d));
  for (int x = 1; x <= s; ++x) {
    if (!longest.reaches(x, s)) continue;
    if (boost::multiprecision::abs(inv(x, t)) < boost::multiprecision::abs(inv(x, s))) return false;
  }
  return true;
}

struct Reinforcement {
  Integer k;           ///< parallel arcs s -> s' added
  Integer bound;       ///< certified cap on k
  Digraph reinforced;  ///< d with the k extra arcs
};

/// Smallest k >= 1 such that adding k arcs s -> s' makes D_{s,s'} invertible.
/// The cap is the least k with |B^-1(s,s')| >= 1 + max_x |_sB^-1(x,s') /
/// B^-1(x,s)| over x ~> s, x < s, B^-1(x,s) != 0, where _sB^-1 is taken in d
/// with s deleted.
inline Reinforcement reinforce(const Digraph& d, int s, int t) {
  if (s == t) throw PreconditionError("reinforce needs two distinct vertices");
  if (s > t) std::swap(s, t);
  detail::check_pair(d, s, t);
  if (!valid_subset(d, {s, t})) throw PreconditionError("attachment pair is not valid");
  if (pair_rule(d, s, t)) throw PreconditionError("pair already yields an invertible extension");

  using boost::multiprecision::cpp_rational;
  const LongestPaths longest(d);
  const ExactMatrix inv = inverse_b(b_matrix(d));
  cpp_rational ratio = 0;
  for (int x = 1; x < s; ++x) {
    if (!longest.reaches(x, s) || inv(x, s) == 0) continue;
    // The two-argument constructor rejects a negative denominator.
    const cpp_rational r(boost::multiprecision::abs(deletion_entry(d, s, x, t)), boost::multiprecision::abs(inv(x, s)));
    if (r > ratio) ratio = r;
  }
  const cpp_rational need = 1 + ratio - cpp_rational(boost::multiprecision::abs(inv(s, t)));
  Integer bound = boost::multiprecision::numerator(need) / boost::multiprecision::denominator(need);
  if (cpp_rational(bound) < need) bound += 1;
  if (bound < 1) bound = 1;

  Digraph current = d;
  for (Integer k = 1; k <= bound; ++k) {
    current.add_arc(s, t);
    if (decide(extend(current, {s, t})).invertible) return {k, bound, current};
  }
  throw std::logic_error("reinforcement did not succeed within its bound");
}

// ---------------------------------------------------------------------------
// Motzkin partitions

class PartitionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// N parts in {0,1,2} summing to N with p_1 + ... + p_i < i for i < N.
class MotzkinPartition {
 public:
  explicit MotzkinPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (auto problem = defect(parts_)) throw PartitionError("not a Motzkin partition: " + *problem);
  }

  /// Why `parts` fails to be a Motzkin partition, if it does.
  static std::optional<std::string> defect(const std::vector<int>& parts) {
    const int n = static_cast<int>(parts.size());
    if (n < 2) return "needs at least two parts";
    int sum = 0;
    for (int i = 1; i <= n; ++i) {
      const int p = parts[static_cast<std::size_t>(i - 1)];
      if (p < 0 || p > 2) return "part " + std::to_string(i) + " outside {0,1,2}";
      sum += p;
      if (i < n && sum >= i) return "prefix sum at " + std::to_string(i) + " is not below " + std::to_string(i);
    }
    if (sum != n) return "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n);
    return std::nullopt;
  }

  int size() const { return static_cast<int>(parts_.size()); }
  /// 1-based part p_i.
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const MotzkinPartition&, const MotzkinPartition&) = default;
  friend auto operator<=>(const MotzkinPartition&, const MotzkinPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// All Motzkin partitions of N in lexicographic order; empty for N < 2.
inline std::vector<MotzkinPartition> motzkin_enumerate(int n) {
  std::vector<MotzkinPartition> out;
  if (n < 2) return out;
  std::vector<int> parts(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i > n) {
      if (sum == n) out.emplace_back(parts);
      return;
    }
    for (int p = 0; p <= 2; ++p) {
      const int next = sum + p;
      if (i < n && next >= i) break;
      if (next + 2 * (n - i) < n) continue;
      parts[static_cast<std::size_t>(i - 1)] = p;
      self(self, i + 1, next);
    }
  };
  rec(rec, 1, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Choosers
//
// A chooser is called as choose(count) with count >= 2 whenever the builder
// faces a real choice, and returns an index in [0, count). Options are always
// listed in increasing label order, so index 0 is the smallest candidate.

template <class C>
concept Chooser = requires(C& c, std::size_t count) {
  { c(count) } -> std::convertible_to<std::size_t>;
};

class ChoiceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Always the smallest candidate.
struct FirstChoice {
  std::size_t operator()(std::size_t) const { return 0; }
};

/// Seeded mt19937_64 with unbiased rejection sampling; the stream is part of
/// the output contract, hence the version tag.
class SeededChooser {
 public:
  static constexpr const char* kGenerator = "mt19937_64/v1";

  explicit SeededChooser(std::uint64_t seed) : rng_(seed) {}

  std::size_t operator()(std::size_t count) { return static_cast<std::size_t>(below(count)); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = rng_();
      if (r >= threshold) return r % bound;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Replays an explicit list of indices.
class ScriptedChooser {
 public:
  explicit ScriptedChooser(std::vector<std::size_t> script) : script_(std::move(script)) {}

  std::size_t operator()(std::size_t count) {
    if (next_ >= script_.size())
      throw ChoiceError("choice list exhausted after " + std::to_string(script_.size()) + " entries");
    const std::size_t index = script_[next_];
    if (index >= count)
      throw ChoiceError("choice " + std::to_string(next_ + 1) + " is " + std::to_string(index) + " but only " +
                        std::to_string(count) + " options exist");
    ++next_;
    return index;
  }

  bool exhausted() const { return next_ == script_.size(); }

 private:
  std::vector<std::size_t> script_;
  std::size_t next_ = 0;
};

/// Odometer over every choice sequence of a deterministic process: run the
/// process, then call next() until it returns false.
class ExhaustiveChooser {
 public:
  std::size_t operator()(std::size_t count) {
    if (position_ < trail_.size()) {
      if (trail_[position_].second != count) throw std::logic_error("exhaustive chooser replay diverged");
      return trail_[position_++].first;
    }
    trail_.emplace_back(0, count);
    ++position_;
    return 0;
  }

  bool next() {
    trail_.resize(position_);
    while (!trail_.empty() && trail_.back().first + 1 == trail_.back().second) trail_.pop_back();
    position_ = 0;
    if (trail_.empty()) return false;
    ++trail_.back().first;
    return true;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> trail_;
  std::size_t position_ = 0;
};

/// One resolved choice: the index taken out of `count` options.
struct ChoiceRecord {
  std::size_t index = 0;
  std::size_t count = 0;

  friend bool operator==(const ChoiceRecord&, const ChoiceRecord&) = default;
};

namespace detail {

template <Chooser C>
class Recorder {
 public:
  Recorder(C& inner, std::vector<ChoiceRecord>& log) : inner_(inner), log_(log) {}

  std::size_t pick(std::size_t count) {
    if (count == 0) throw std::logic_error("no candidates available");
    if (count == 1) return 0;
    const std::size_t index = static_cast<std::size_t>(inner_(count));
    if (index >= count) throw ChoiceError("chooser returned an out-of-range index");
    log_.push_back({index, count});
    return index;
  }

 private:
  C& inner_;
  std::vector<ChoiceRecord>& log_;
};

class Components {
 public:
  explicit Components(int n) : parent_(static_cast<std::size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Picks `count` candidates in increasing label order, pairwise in distinct
// components, so each admissible set arises from exactly one choice sequence.
template <Chooser C>
std::vector<int> pick_distinct_components(const std::vector<int>& candidates, int count, Components& comp,
                                          Recorder<C>& rec) {
  std::vector<int> picked;
  std::vector<int> used;
  auto free = [&](int u) {
    const int r = comp.find(u);
    return std::find(used.begin(), used.end(), r) == used.end();
  };
  std::size_t floor = 0;
  for (int remaining = count; remaining > 0; --remaining) {
    std::vector<std::size_t> options;
    for (std::size_t a = floor; a < candidates.size(); ++a) {
      const int u = candidates[a];
      if (!free(u)) continue;
      // Feasible when enough further components still have larger members.
      std::vector<int> roots{comp.find(u)};
      for (std::size_t b = a + 1; b < candidates.size() && static_cast<int>(roots.size()) < remaining; ++b) {
        const int r = comp.find(candidates[b]);
        if (free(candidates[b]) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      if (static_cast<int>(roots.size()) >= remaining) options.push_back(a);
    }
    const std::size_t a = options.at(rec.pick(options.size()));
    picked.push_back(candidates[a]);
    used.push_back(comp.find(candidates[a]));
    floor = a + 1;
  }
  return picked;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cycle and unicyclic construction

/// Cycle adjacency sets C_i for i in [v+1, v+N]; C_{v+1} is always empty.
struct CycleSets {
  int v = 0;
  int n = 0;
  std::vector<std::vector<int>> sets;

  const std::vector<int>& at(int i) const { return sets.at(static_cast<std::size_t>(i - v - 1)); }
  std::vector<int> sizes() const {
    std::vector<int> out;
    for (const auto& c : sets) out.push_back(static_cast<int>(c.size()));
    return out;
  }

  friend bool operator==(const CycleSets&, const CycleSets&) = default;
};

struct CycleBuild {
  CycleSets cycle;
  std::vector<ChoiceRecord> choices;
};

/// Adjoins the sets in order; each intermediate graph stays a forest of
/// paths, and the last step closes the single cycle on v+1..v+N. N = 2 closes
/// with a doubled arc.
template <Chooser C>
CycleBuild build_cycle(const MotzkinPartition& p, int v, C& choose) {
  if (v < 0) throw PreconditionError("cycle offset must be nonnegative");
  const int n = p.size();
  CycleBuild out;
  out.cycle.v = v;
  out.cycle.n = n;
  out.cycle.sets.assign(static_cast<std::size_t>(n), {});
  detail::Recorder<C> rec(choose, out.choices);
  detail::Components comp(v + n);
  std::vector<int> degree(static_cast<std::size_t>(v + n) + 1, 0);

  for (int i = v + 2; i <= v + n; ++i) {
    const int want = p[i - v];
    std::vector<int> chosen;
    if (i == v + n) {
      for (int u = v + 1; u < i; ++u)
        for (int r = degree[u]; r < 2; ++r) chosen.push_back(u);
      if (static_cast<int>(chosen.size()) != want) throw std::logic_error("cycle closure is not forced");
    } else if (want > 0) {
      std::vector<int> candidates;
      for (int u = v + 1; u < i; ++u)
        if (degree[u] <= 1) candidates.push_back(u);
      chosen = detail::pick_distinct_components(candidates, want, comp, rec);
    }
    for (int u : chosen) {
      ++degree[u];
      ++degree[i];
      comp.join(u, i);
    }
    out.cycle.sets[static_cast<std::size_t>(i - v - 1)] = std::move(chosen);
  }
  return out;
}

inline CycleBuild build_cycle(const MotzkinPartition& p, int v) {
  FirstChoice first;
  return build_cycle(p, v, first);
}

/// Conditions on (M, N, v, P) alone.
inline void validate_unicyclic_shape(int m, int n, int v, const std::vector<int>& p) {
  auto fail = [](const std::string& what) { throw PartitionError(what); };
  if (n < 2) fail("N >= 2 required");
  if (m <= n) fail("M > N required");
  if (v < 1 || v > m - n) fail("1 <= v <= M - N required");
  if (auto problem = MotzkinPartition::defect(p); problem || static_cast<int>(p.size()) != n)
    fail("P must be a Motzkin partition of N" + (problem ? ": " + *problem : std::string()));
}

/// Throws PartitionError naming the first violated parameter condition.
inline void validate_unicyclic_parameters(int m, int n, int v, const std::vector<int>& t,
                                          const std::vector<int>& p) {
  auto fail = [](const std::string& what) { throw PartitionError(what); };
  validate_unicyclic_shape(m, n, v, p);
  if (static_cast<int>(t.size()) != m) fail("T must have exactly M parts");
  int sum = 0;
  for (int i = 1; i <= m; ++i) {
    const int ti = t[static_cast<std::size_t>(i - 1)];
    if (ti < 0) fail("T parts must be nonnegative (t_" + std::to_string(i) + ")");
    if (i > v && i <= v + n && ti < p[static_cast<std::size_t>(i - v - 1)])
      fail("t_i >= p_i for all v+1 <= i <= v+N fails at i = " + std::to_string(i));
    sum += ti;
    if (sum > i) fail("sum_{k<=i} t_k <= i fails at i = " + std::to_string(i));
    if (i < v + n && sum >= i) fail("sum_{k<=i} t_k < i for i < v+N fails at i = " + std::to_string(i));
  }
  if (sum != m) fail("T must sum to M");
}

struct UnicyclicBuild {
  Digraph digraph;
  CycleSets cycle;
  std::vector<std::vector<int>> adjacency;  ///< S_i at index i - 1
  std::vector<ChoiceRecord> choices;
};

namespace detail {

inline void check_cycle_sets(const CycleSets& c) {
  const int lo = c.v + 1, hi = c.v + c.n;
  if (static_cast<int>(c.sets.size()) != c.n) throw PreconditionError("cycle sets do not cover the window");
  std::vector<int> degree(static_cast<std::size_t>(hi) + 1, 0);
  Components comp(hi);
  int joins = 0;
  for (int i = lo; i <= hi; ++i)
    for (int u : c.at(i)) {
      if (u < lo || u >= i) throw PreconditionError("cycle set C_" + std::to_string(i) + " leaves [v+1, i-1]");
      ++degree[u];
      ++degree[i];
      if (comp.find(u) != comp.find(i)) ++joins;
      comp.join(u, i);
    }
  for (int u = lo; u <= hi; ++u)
    if (degree[u] != 2) throw PreconditionError("cycle sets do not form a cycle on the window");
  if (joins != c.n - 1) throw PreconditionError("cycle sets do not form a single cycle");
}

}  // namespace detail

/// Builds the unicyclic digraph for (M, T) around a given cycle: S_i is C_i
/// plus q_i further vertices of [1, i-1], one from each of q_i distinct
/// components avoiding the component of i.
template <Chooser C>
UnicyclicBuild build_unicyclic(int m, const std::vector<int>& t, const CycleSets& cycle, C& choose) {
  validate_unicyclic_parameters(m, cycle.n, cycle.v, t, cycle.sizes());
  detail::check_cycle_sets(cycle);
  UnicyclicBuild out;
  out.cycle = cycle;
  out.digraph = Digraph(m);
  out.adjacency.assign(static_cast<std::size_t>(m), {});
  detail::Recorder<C> rec(choose, out.choices);
  detail::Components comp(m);
  const int lo = cycle.v + 1, hi = cycle.v + cycle.n;
  for (int i = lo + 1; i <= hi; ++i)
    for (int u : cycle.at(i)) comp.join(u, i);

  for (int i = 2; i <= m; ++i) {
    const bool in_window = i >= lo && i <= hi;
    const int q = t[static_cast<std::size_t>(i - 1)] - (in_window ? static_cast<int>(cycle.at(i).size()) : 0);
    std::vector<int> extra;
    if (q > 0) {
      std::vector<int> candidates;
      for (int u = 1; u < i; ++u)
        if (comp.find(u) != comp.find(i)) candidates.push_back(u);
      extra = detail::pick_distinct_components(candidates, q, comp, rec);
      for (int u : extra) comp.join(u, i);
    }
    auto& s = out.adjacency[static_cast<std::size_t>(i - 1)];
    s = extra;
    if (in_window) s.insert(s.end(), cycle.at(i).begin(), cycle.at(i).end());
    std::sort(s.begin(), s.end());
    for (int u : s) out.digraph.add_arc(u, i);
  }
  return out;
}

/// Full construction: build_cycle followed by the tree attachments, with one
/// chooser feeding both stages in that order.
template <Chooser C>
UnicyclicBuild build_unicyclic(int m, int n, int v, const std::vector<int>& t, const MotzkinPartition& p,
                               C& choose) {
  validate_unicyclic_parameters(m, n, v, t, p.parts());
  CycleBuild cycle = build_cycle(p, v, choose);
  UnicyclicBuild out = build_unicyclic(m, t, cycle.cycle, choose);
  out.choices.insert(out.choices.begin(), cycle.choices.begin(), cycle.choices.end());
  return out;
}

/// Invertible iff N is even or C_i = {i-1} for every v+1 < i < v+N.
inline bool constructed_invertible(const CycleSets& c) {
  if (c.n % 2 == 0) return true;
  for (int i = c.v + 2; i < c.v + c.n; ++i)
    if (c.at(i) != std::vector<int>{i - 1}) return false;
  return true;
}

/// The path cycle: C_i = {i-1} inside the window and C_{v+N} = {v+1, v+N-1}.
inline CycleSets chain_cycle(int n, int v) {
  if (n < 2) throw PreconditionError("cycle length must be at least 2");
  CycleSets c{v, n, std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  for (int i = v + 2; i < v + n; ++i) c.sets[static_cast<std::size_t>(i - v - 1)] = {i - 1};
  c.sets.back() = {v + 1, v + n - 1};
  return c;
}

// ---------------------------------------------------------------------------
// Parameter enumeration and uniform sampling

namespace detail {

// ways[i][s]: completions of t_{i+1..M} given prefix sum s after position i.
inline std::vector<std::vector<Integer>> completion_table(int m, int n, int v, const std::vector<int>& p) {
  std::vector<std::vector<Integer>> ways(static_cast<std::size_t>(m) + 1,
                                         std::vector<Integer>(static_cast<std::size_t>(m) + 1, 0));
  ways[m][m] = 1;
  for (int i = m; i >= 1; --i) {
    const int lower = (i > v && i <= v + n) ? p[static_cast<std::size_t>(i - v - 1)] : 0;
    const int cap = i < v + n ? i - 1 : i;
    for (int s = 0; s <= m; ++s)
      for (int next = s + lower; next <= std::min(cap, m); ++next) ways[i - 1][s] += ways[i][next];
  }
  return ways;
}

inline int lower_bound_at(int i, int n, int v, const std::vector<int>& p) {
  return (i > v && i <= v + n) ? p[static_cast<std::size_t>(i - v - 1)] : 0;
}

}  // namespace detail

/// Number of valid T for the given (M, N, v, P).
inline Integer count_degree_partitions(int m, int n, int v, const MotzkinPartition& p) {
  validate_unicyclic_shape(m, n, v, p.parts());
  return detail::completion_table(m, n, v, p.parts())[0][0];
}

/// Every valid T in lexicographic order.
inline std::vector<std::vector<int>> enumerate_degree_partitions(int m, int n, int v, const MotzkinPartition& p) {
  validate_unicyclic_shape(m, n, v, p.parts());
  const auto ways = detail::completion_table(m, n, v, p.parts());
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int i, int s) -> void {
    if (i > m) {
      out.push_back(t);
      return;
    }
    const int cap = i < v + n ? i - 1 : i;
    for (int next = s + detail::lower_bound_at(i, n, v, p.parts()); next <= std::min(cap, m); ++next) {
      if (ways[i][next] == 0) continue;
      t[static_cast<std::size_t>(i - 1)] = next - s;
      self(self, i + 1, next);
    }
  };
  if (ways[0][0] != 0) rec(rec, 1, 0);
  return out;
}

/// Uniform integer in [0, bound) from 64-bit words, by rejection.
inline Integer uniform_below(const Integer& bound, SeededChooser& rng) {
  if (bound <= 0) throw std::invalid_argument("empty range");
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    Integer x = 0;
    for (unsigned have = 0; have < bits; have += 64) x = (x << 64) | Integer(rng.engine()());
    x &= (Integer(1) << bits) - 1;
    if (x < bound) return x;
  }
}

/// Uniform valid T given (M, N, v, P).
inline std::vector<int> sample_degree_partition(int m, int n, int v, const MotzkinPartition& p, SeededChooser& rng) {
  validate_unicyclic_shape(m, n, v, p.parts());
  const auto ways = detail::completion_table(m, n, v, p.parts());
  std::vector<int> t;
  int s = 0;
  for (int i = 1; i <= m; ++i) {
    Integer r = uniform_below(ways[i - 1][s], rng);
    const int cap = i < v + n ? i - 1 : i;
    int next = s + detail::lower_bound_at(i, n, v, p.parts());
    for (; next <= std::min(cap, m); ++next) {
      if (r < ways[i][next]) break;
      r -= ways[i][next];
    }
    t.push_back(next - s);
    s = next;
  }
  return t;
}

/// Fills in whichever of T and P is missing so that the pair (P, T) is
/// uniform over all valid pairs consistent with what was given.
inline std::pair<std::vector<int>, MotzkinPartition> sample_unicyclic_parameters(
    int m, int n, int v, std::optional<std::vector<int>> t, std::optional<MotzkinPartition> p, SeededChooser& rng) {
  if (p) {
    if (!t) t = sample_degree_partition(m, n, v, *p, rng);
    validate_unicyclic_parameters(m, n, v, *t, p->parts());
    return {*t, *p};
  }
  if (n < 2) throw PartitionError("N >= 2 required");
  std::vector<MotzkinPartition> options;
  std::vector<Integer> weight;
  for (auto& candidate : motzkin_enumerate(n)) {
    if (t) {
      try {
        validate_unicyclic_parameters(m, n, v, *t, candidate.parts());
      } catch (const PartitionError&) {
        continue;
      }
      weight.push_back(1);
    } else {
      validate_unicyclic_shape(m, n, v, candidate.parts());
      weight.push_back(count_degree_partitions(m, n, v, candidate));
    }
    options.push_back(std::move(candidate));
  }
  const Integer total = std::accumulate(weight.begin(), weight.end(), Integer(0));
  if (total == 0) throw PartitionError("no Motzkin partition P is compatible with T");
  Integer r = uniform_below(total, rng);
  std::size_t k = 0;
  while (r >= weight[k]) r -= weight[k++];
  if (!t) t = sample_degree_partition(m, n, v, options[k], rng);
  return {*t, options[k]};
}

}  // namespace ginv

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

/// \file oracle.hpp
/// \brief Slow, independent reference computations for cross-checking.
///
/// Nothing here relies on the path calculus: inverses come from rational
/// elimination, signings from exhaustive search, paths and matchings from
/// explicit enumeration, spectra from Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ginv/graph.hpp"
#include "ginv/inversion.hpp"
#include "ginv/matrix.hpp"

namespace ginv::oracle {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full 2n x 2n adjacency matrix, bottom vertices first.
inline ExactMatrix adjacency(const MatchedBipartiteGraph& g) {
  const int n = g.columns();
  ExactMatrix a(2 * n);
  for (int c = 1; c <= n; ++c) a(g.bottom(c), g.top(c)) = a(g.top(c), g.bottom(c)) = 1;
  for (const auto& arc : g.digraph().arcs()) {
    a(g.bottom(arc.from), g.top(arc.to)) = arc.multiplicity;
    a(g.top(arc.to), g.bottom(arc.from)) = arc.multiplicity;
  }
  return a;
}

/// Exact inverse by Gauss-Jordan elimination over the rationals. Throws
/// std::logic_error unless det = +-1, the inverse is integral and its blocks
/// are [[0, (B^T)^-1], [B^-1, 0]].
inline ExactMatrix brute_inverse(const MatchedBipartiteGraph& g) {
  using boost::multiprecision::cpp_rational;
  const int n = g.columns();
  const int size = 2 * n;
  const ExactMatrix a = adjacency(g);
  std::vector<std::vector<cpp_rational>> m(static_cast<std::size_t>(size),
                                           std::vector<cpp_rational>(static_cast<std::size_t>(2 * size)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) m[i][j] = cpp_rational(a(i + 1, j + 1));
    m[i][size + i] = 1;
  }
  cpp_rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) throw std::logic_error("adjacency matrix is singular");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const cpp_rational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (int r = 0; r < size; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const cpp_rational f = m[r][col];
      for (int k = 0; k < 2 * size; ++k) m[r][k] -= f * m[col][k];
    }
  }
  if (det != 1 && det != -1) throw std::logic_error("adjacency determinant is not +-1");
  ExactMatrix inv(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const cpp_rational& x = m[i][size + j];
      if (boost::multiprecision::denominator(x) != 1) throw std::logic_error("inverse is not integral");
      inv(i + 1, j + 1) = boost::multiprecision::numerator(x);
    }

  const ExactMatrix binv = inverse_b(b_matrix(g.digraph()));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool ok = inv(g.bottom(i), g.bottom(j)) == 0 && inv(g.top(i), g.top(j)) == 0 &&
                      inv(g.top(i), g.bottom(j)) == binv(i, j) && inv(g.bottom(i), g.top(j)) == binv(j, i);
      if (!ok) throw std::logic_error("inverse does not have the expected block structure");
    }
  return inv;
}

/// Tries every signing with s_1 = +1 in binary counting order.
inline std::optional<Signing> exhaustive_signing(const ExactMatrix& m) {
  const int n = m.size();
  if (n > 20) throw OracleError("exhaustive_signing is limited to 20 vertices");
  if (n == 0) return Signing();
  std::vector<int> s(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
    s[0] = 1;
    for (int i = 1; i < n; ++i) s[i] = (mask >> (i - 1)) & 1u ? -1 : 1;
    Signing candidate(s);
    if (candidate.signs(m)) return candidate;
  }
  return std::nullopt;
}

/// A directed path together with the copy of each parallel arc it uses.
struct Path {
  std::vector<int> vertices;
  std::vector<Integer> copies;  ///< copies[k] in [0, multiplicity) for arc k

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Every i ~> j path; parallel arcs give distinct paths. Includes the
/// length-0 path when i == j.
inline std::vector<Path> enumerate_paths(const Digraph& d, int i, int j) {
  std::vector<Path> out;
  if (i < 1 || j < 1 || i > d.size() || j > d.size()) throw std::out_of_range("vertex out of range");
  Path current{{i}, {}};
  auto walk = [&](auto&& self, int u) -> void {
    if (u == j) {
      out.push_back(current);
      return;
    }
    for (int w = u + 1; w <= j; ++w) {
      const Integer& m = d.multiplicity(u, w);
      for (Integer c = 0; c < m; ++c) {
        current.vertices.push_back(w);
        current.copies.push_back(c);
        self(self, w);
        current.vertices.pop_back();
        current.copies.pop_back();
      }
    }
  };
  if (i <= j) walk(walk, i);
  return out;
}

/// Number of perfect matchings, counting parallel edges separately.
inline Integer enumerate_matchings(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw OracleError("enumerate_matchings is limited to 16 vertices");
  std::vector<std::vector<std::pair<int, Integer>>> adj(static_cast<std::size_t>(n) + 1);
  for (int u = 1; u <= n; ++u) adj[u] = g.neighbors(u);
  std::vector<char> matched(static_cast<std::size_t>(n) + 1, 0);
  auto count = [&](auto&& self) -> Integer {
    int u = 1;
    while (u <= n && matched[u]) ++u;
    if (u > n) return 1;
    matched[u] = 1;
    Integer total = 0;
    for (const auto& [w, m] : adj[u]) {
      if (matched[w]) continue;
      matched[w] = 1;
      total += m * self(self);
      matched[w] = 0;
    }
    matched[u] = 0;
    return total;
  };
  return count(count);
}

/// All digraphs on n vertices with multiplicities at most max_mult. Instance
/// k has, for the p-th pair (i,j) in lexicographic order, multiplicity equal
/// to the p-th base-(max_mult+1) digit of k, least significant first.
class DigraphEnumeration {
 public:
  DigraphEnumeration(int n, int max_mult) : n_(n), base_(max_mult + 1) {
    if (n < 1 || n > 6) throw OracleError("enumerate_digraphs needs 1 <= n <= 6");
    if (max_mult < 1 || max_mult > 2) throw OracleError("enumerate_digraphs needs 1 <= maxMult <= 2");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
    count_ = 1;
    for (std::size_t p = 0; p < pairs_.size(); ++p) count_ *= static_cast<std::uint64_t>(base_);
  }

  std::uint64_t size() const { return count_; }

  Digraph at(std::uint64_t index) const {
    if (index >= count_) throw std::out_of_range("enumeration index out of range");
    Digraph d(n_);
    for (auto [i, j] : pairs_) {
      const int m = static_cast<int>(index % static_cast<std::uint64_t>(base_));
      index /= static_cast<std::uint64_t>(base_);
      if (m) d.set_multiplicity(i, j, m);
    }
    return d;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t k = 0; k < count_; ++k) f(at(k));
  }

 private:
  int n_;
  int base_;
  std::vector<std::pair<int, int>> pairs_;
  std::uint64_t count_ = 0;
};

inline DigraphEnumeration enumerate_digraphs(int n, int max_mult) { return DigraphEnumeration(n, max_mult); }

/// Inverse of a uni-triangular B as the finite Neumann series
/// sum_{m=0}^{n} (-1)^m (B - I)^m; (B - I)^n vanishes by nilpotency.
inline ExactMatrix neumann_inverse(const ExactMatrix& b) {
  const int n = b.size();
  const ExactMatrix nil = b - ExactMatrix::identity(n);
  ExactMatrix power = ExactMatrix::identity(n);
  ExactMatrix sum = power;
  for (int m = 1; m <= n; ++m) {
    power = power * nil;
    ExactMatrix term = power;
    if (m % 2 == 1) term = ExactMatrix(n) - term;
    sum = sum + term;
  }
  return sum;
}

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Spectrum {
  std::vector<double> eigenvalues;  ///< ascending
  int sweeps = 0;
  double initial_norm = 0;      ///< Frobenius norm of the input
  double final_off_norm = 0;    ///< off-diagonal Frobenius norm at exit
};

constexpr int kJacobiMaxSweeps = 100;
constexpr double kJacobiThreshold = 1e-12;

/// Cyclic Jacobi for a dense symmetric matrix given row-major. Stops when the
/// off-diagonal Frobenius mass drops below 1e-12 of the input norm.
inline Spectrum symmetric_spectrum(std::vector<double> a, int n) {
  if (static_cast<int>(a.size()) != n * n) throw std::invalid_argument("matrix data does not match dimension");
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };
  Spectrum out;
  double total = 0;
  for (double x : a) total += x * x;
  out.initial_norm = std::sqrt(total);
  const double target = kJacobiThreshold * std::max(out.initial_norm, 1e-300);

  for (out.final_off_norm = off_norm(); out.final_off_norm > target; out.final_off_norm = off_norm()) {
    if (out.sweeps == kJacobiMaxSweeps) throw EigenError("Jacobi iteration did not converge");
    ++out.sweeps;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  for (int i = 0; i < n; ++i) out.eigenvalues.push_back(at(i, i));
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

inline Spectrum adjacency_spectrum(const MatchedBipartiteGraph& g) {
  const ExactMatrix a = adjacency(g);
  const int n = a.size();
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) data.push_back(a(i, j).convert_to<double>());
  return symmetric_spectrum(std::move(data), n);
}

/// Sorted spectrum of g_plus equals the sorted reciprocals of g's spectrum,
/// entrywise within `tol`.
inline bool spectrum_reciprocal_check(const MatchedBipartiteGraph& g, const MatchedBipartiteGraph& g_plus,
                                      double tol = 1e-8) {
  if (g.vertex_count() > 24 || g_plus.vertex_count() > 24)
    throw OracleError("spectral check is limited to 24 vertices");
  if (g.vertex_count() != g_plus.vertex_count()) return false;
  const Spectrum s = adjacency_spectrum(g);
  const Spectrum t = adjacency_spectrum(g_plus);
  std::vector<double> reciprocal;
  for (double x : s.eigenvalues) {
    if (std::fabs(x) <= tol) return false;
    reciprocal.push_back(1 / x);
  }
  std::sort(reciprocal.begin(), reciprocal.end());
  for (std::size_t k = 0; k < reciprocal.size(); ++k)
    if (std::fabs(reciprocal[k] - t.eigenvalues[k]) > tol) return false;
  return true;
}

}  // namespace ginv::oracle

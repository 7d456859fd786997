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

/// \file matrix.hpp
/// \brief Dense square matrices of unbounded integers, 1-based access.

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginv/graph.hpp"

namespace ginv {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
  }

  /// Row-major construction from nested initializer rows.
  ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : ExactMatrix(static_cast<int>(rows.size())) {
    int i = 1;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix must be square");
      int j = 1;
      for (long long value : row) (*this)(i, j++) = value;
      ++i;
    }
  }

  static ExactMatrix identity(int n) {
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }

  Integer& operator()(int i, int j) { return data_[index(i, j)]; }
  const Integer& operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Diagonal all ones and strictly lower triangle all zero.
  bool is_unitriangular() const {
    for (int i = 1; i <= n_; ++i) {
      if ((*this)(i, i) != 1) return false;
      for (int j = 1; j < i; ++j)
        if ((*this)(i, j) != 0) return false;
    }
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Entrywise absolute value.
  ExactMatrix abs() const {
    ExactMatrix a(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) a.data_[k] = boost::multiprecision::abs(data_[k]);
    return a;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    check_same(a, b);
    ExactMatrix c(a.n_);
    for (int i = 1; i <= a.n_; ++i)
      for (int k = 1; k <= a.n_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 1; j <= a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    check_same(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    for (int i = 1; i <= m.n_; ++i) {
      for (int j = 1; j <= m.n_; ++j) os << (j > 1 ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  static void check_same(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimensions differ");
  }
  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }

  int n_ = 0;
  std::vector<Integer> data_;
};

}  // namespace ginv

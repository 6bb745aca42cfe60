// Copyright 2026 frobase developers
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

// Test-only oracles, independent of the library's numerical paths.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

using GaussInt = std::complex<int64_t>;

inline GaussInt gmul(const GaussInt& a, const GaussInt& b) {
  return GaussInt(a.real() * b.real() - a.imag() * b.imag(),
                  a.real() * b.imag() + a.imag() * b.real());
}

// Exact division in the Gaussian integers; Bareiss guarantees divisibility.
inline GaussInt gdiv(const GaussInt& a, const GaussInt& b) {
  const int64_t n = b.real() * b.real() + b.imag() * b.imag();
  if (n == 0) throw std::runtime_error("gaussian division by zero");
  const GaussInt prod = gmul(a, GaussInt(b.real(), -b.imag()));
  if (prod.real() % n != 0 || prod.imag() % n != 0)
    throw std::runtime_error("inexact gaussian division");
  return GaussInt(prod.real() / n, prod.imag() / n);
}

/// Exact rank of an integer (Gaussian-integer) matrix via fraction-free
/// Bareiss elimination.
inline int exact_rank(std::vector<std::vector<GaussInt>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  GaussInt prev(1, 0);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != GaussInt(0, 0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = gdiv(gmul(m[rank][col], m[r][c]) - gmul(m[r][col], m[rank][c]), prev);
      m[r][col] = GaussInt(0, 0);
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

inline int exact_null_dim(const std::vector<std::vector<GaussInt>>& m) {
  if (m.empty()) return 0;
  return static_cast<int>(m[0].size()) - exact_rank(m);
}

/// Naive Kronecker product, written independently of the library.
inline Eigen::MatrixXcd naive_kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace oracles

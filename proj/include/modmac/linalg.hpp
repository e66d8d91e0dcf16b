/* Copyright 2026 The modmac Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef MODMAC_LINALG_HPP
#define MODMAC_LINALG_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "modmac/ratfun.hpp"
#include "modmac/rational.hpp"

namespace modmac {

/// Row-major dense matrix.
template <class K>
using Matrix = std::vector<std::vector<K>>;

inline std::size_t pivot_cost(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

inline std::size_t pivot_cost(const CycRat& x) {
  std::size_t cost = static_cast<std::size_t>(x.num().degree() + x.den().degree()) * 1024;
  for (const auto& c : x.num().coeffs()) cost += c.trimmed_coeffs().size();
  return cost;
}

/**
 * Inverts a square matrix over a field by Gauss-Jordan elimination. The pivot
 * in each column is the nonzero entry of least `pivot_cost` (bit size for
 * rationals, q-degree for rational functions). Returns nullopt if singular.
 */
template <class K>
std::optional<Matrix<K>> invert(Matrix<K> a) {
  const std::size_t n = a.size();
  Matrix<K> inv(n, std::vector<K>(n, K(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = K(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      const std::size_t c = pivot_cost(a[r][col]);
      if (c < best_cost) {
        best = r;
        best_cost = c;
      }
    }
    if (best == n) return std::nullopt;
    std::swap(a[col], a[best]);
    std::swap(inv[col], inv[best]);
    const K p = K(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(a[col][j])) a[col][j] = a[col][j] * p;
      if (!is_zero(inv[col][j])) inv[col][j] = inv[col][j] * p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      const K f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a[col][j])) a[r][j] = a[r][j] - f * a[col][j];
        if (!is_zero(inv[col][j])) inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Solves a x = b for square nonsingular a; nullopt if singular.
template <class K>
std::optional<std::vector<K>> solve(Matrix<K> a, std::vector<K> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      const std::size_t c = pivot_cost(a[r][col]);
      if (c < best_cost) {
        best = r;
        best_cost = c;
      }
    }
    if (best == n) return std::nullopt;
    std::swap(a[col], a[best]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      const K f = a[r][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j)
        if (!is_zero(a[col][j])) a[r][j] = a[r][j] - f * a[col][j];
    }
  }
  std::vector<K> x(n, K(0));
  for (std::size_t i = n; i-- > 0;) {
    K acc = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(a[i][j])) acc = acc - a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace modmac

#endif  // MODMAC_LINALG_HPP

// Copyright 2026 The montyhall Authors.
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

#include "core/linalg.hpp"

#include <algorithm>
#include <map>

namespace montyhall {

std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector e(n, 0);
    e[k] = 1;
    auto col = solve_linear(a, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv[i][k] = (*col)[i];
  }
  return inv;
}

namespace {

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const RationalMatrix& rows, const RationalVector& rhs,
                                       Sense sense, bool sum_to_one) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::map<RationalVector, Vertex> found;

  auto feasible = [&](const RationalVector& x, Vertex* v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) < 0) return false;
      if (sgn(x[i]) == 0) v->zero_coords.push_back(i);
    }
    for (std::size_t j = 0; j < m; ++j) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) != 0) lhs += rows[j][i] * x[i];
      }
      const int c = cmp(lhs, rhs[j]);
      if ((sense == Sense::kLessEqual && c > 0) || (sense == Sense::kGreaterEqual && c < 0)) {
        return false;
      }
      if (c == 0) v->tight_constraints.push_back(j);
    }
    return true;
  };

  const std::size_t extra = sum_to_one ? 1 : 0;
  for (std::size_t support = extra; support <= n; ++support) {
    const std::size_t tight = support - extra;
    if (tight > m) continue;
    for_each_subset(n, support, [&](const std::vector<std::size_t>& cols) {
      for_each_subset(m, tight, [&](const std::vector<std::size_t>& active) {
        RationalMatrix a;
        RationalVector b;
        for (auto j : active) {
          RationalVector row;
          for (auto i : cols) row.push_back(rows[j][i]);
          a.push_back(std::move(row));
          b.push_back(rhs[j]);
        }
        if (sum_to_one) {
          a.emplace_back(support, Rational(1));
          b.emplace_back(1);
        }
        std::optional<RationalVector> sol =
            support == 0 ? std::optional<RationalVector>(RationalVector{}) : solve_linear(a, b);
        if (!sol) return;
        RationalVector x(n, 0);
        for (std::size_t k = 0; k < support; ++k) x[cols[k]] = (*sol)[k];
        if (found.count(x)) return;
        Vertex v;
        if (!feasible(x, &v)) return;
        v.point = x;
        found.emplace(std::move(x), std::move(v));
      });
    });
  }
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [key, v] : found) out.push_back(std::move(v));
  return out;
}

}  // namespace montyhall

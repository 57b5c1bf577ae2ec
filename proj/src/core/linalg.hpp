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

#ifndef MONTYHALL_CORE_LINALG_HPP_
#define MONTYHALL_CORE_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace montyhall {

using RationalMatrix = std::vector<RationalVector>;

// Solves a square system exactly. Empty if the matrix is singular.
std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b);

// Exact inverse of a square matrix. Empty if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// A vertex of a polytope in the nonnegative orthant, with every inequality
// that holds with equality there.
struct Vertex {
  RationalVector point;
  std::vector<std::size_t> zero_coords;       // i with x_i == 0
  std::vector<std::size_t> tight_constraints;  // j with row_j . x == rhs_j
};

enum class Sense { kLessEqual, kGreaterEqual };

// Vertices of { x >= 0 : rows . x (sense) rhs [, sum(x) == 1] }.
//
// Enumerates every (support I, tight rows J) with |J| = |I| - [sum_to_one]
// whose restricted system is nonsingular, so each solve is at most
// min(#rows + 1, dim) square. Every vertex arises this way because some basis
// of its active constraints consists of x_i = 0 for i outside I plus rows J.
// The origin is included when it is feasible. Results are deduplicated and
// sorted lexicographically.
std::vector<Vertex> enumerate_vertices(const RationalMatrix& rows, const RationalVector& rhs,
                                       Sense sense, bool sum_to_one);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_LINALG_HPP_

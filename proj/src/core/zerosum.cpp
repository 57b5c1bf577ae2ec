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

#include "core/zerosum.hpp"

#include <algorithm>

#include "core/dominance.hpp"
#include "core/error.hpp"
#include "core/linalg.hpp"

namespace montyhall {

bool ZeroSumSolution::certificate_holds(const PayoffMatrix& m) const {
  const auto by_col = row_payoffs(contestant_optimal.probs(), m);
  const auto by_row = column_payoffs(m, host_optimal.probs());
  if (by_col != contestant_guarantee || by_row != host_guarantee) return false;
  return std::all_of(by_col.begin(), by_col.end(), [&](const Rational& v) { return v >= value; }) &&
         std::all_of(by_row.begin(), by_row.end(), [&](const Rational& v) { return v <= value; });
}

namespace {

Rational min_entry(const PayoffMatrix& m) {
  Rational lo = m.at(0, 0);
  for (const auto& row : m.entries()) {
    for (const auto& x : row) lo = std::min(lo, x);
  }
  return lo;
}

ZeroSumSolution make_solution(const PayoffMatrix& m, Rational value, RationalVector p,
                              RationalVector q, std::string method) {
  ZeroSumSolution s;
  s.value = std::move(value);
  s.contestant_optimal = MixedStrategy(m.row_labels(), std::move(p));
  s.host_optimal = MixedStrategy(m.col_labels(), std::move(q));
  s.contestant_guarantee = row_payoffs(s.contestant_optimal.probs(), m);
  s.host_guarantee = column_payoffs(m, s.host_optimal.probs());
  s.method = std::move(method);
  return s;
}

}  // namespace

ZeroSumSolution solve(const PayoffMatrix& m) {
  // Shift so every entry is >= 1; then max sum(w) s.t. A w <= 1, w >= 0 is
  // bounded with value 1/v' and its duals give the row strategy.
  const Rational shift = 1 - min_entry(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t width = cols + rows;  // structural then slack columns

  RationalMatrix tab(rows, RationalVector(width + 1, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) tab[i][j] = m.at(i, j) + shift;
    tab[i][cols + i] = 1;
    tab[i][width] = 1;
  }
  RationalVector objective(width + 1, 0);  // reduced costs; last entry is the objective value
  for (std::size_t j = 0; j < cols; ++j) objective[j] = -1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  while (true) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(objective[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;
    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(tab[i][entering]) <= 0) continue;
      const Rational ratio = tab[i][width] / tab[i][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) throw Error(ErrorCode::kInternal, "simplex: unbounded shifted game");
    const Rational pivot = tab[leaving][entering];
    for (auto& x : tab[leaving]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leaving || sgn(tab[i][entering]) == 0) continue;
      const Rational f = tab[i][entering];
      for (std::size_t j = 0; j <= width; ++j) tab[i][j] -= f * tab[leaving][j];
    }
    const Rational f = objective[entering];
    for (std::size_t j = 0; j <= width; ++j) objective[j] -= f * tab[leaving][j];
    basis[leaving] = entering;
  }

  const Rational total = objective[width];  // = sum(w) = sum(u) = 1 / v'
  const Rational shifted_value = 1 / total;
  RationalVector q(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) q[basis[i]] = tab[i][width] * shifted_value;
  }
  RationalVector p(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) p[i] = objective[cols + i] * shifted_value;
  auto s = make_solution(m, shifted_value - shift, std::move(p), std::move(q), "simplex");
  if (!s.certificate_holds(m)) {
    throw Error(ErrorCode::kInternal, "simplex produced an invalid certificate");
  }
  return s;
}

MinimaxSet enumerate_minimax(const PayoffMatrix& m, Player side) {
  const Rational value = solve(m).value;
  MinimaxSet out{side, value, {}};
  RationalMatrix rows;
  RationalVector rhs;
  std::vector<Vertex> vertices;
  if (side == Player::kContestant) {
    // { x in simplex : (x^T M)_c >= value for every column c }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows.push_back(m.column(c));
      rhs.push_back(value);
    }
    vertices = enumerate_vertices(rows, rhs, Sense::kGreaterEqual, true);
  } else {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows.push_back(m.row(r));
      rhs.push_back(value);
    }
    vertices = enumerate_vertices(rows, rhs, Sense::kLessEqual, true);
  }
  const auto& labels = side == Player::kContestant ? m.row_labels() : m.col_labels();
  for (auto& v : vertices) out.vertices.emplace_back(labels, std::move(v.point));
  return out;
}

MinimaxCheck is_minimax(const PayoffMatrix& m, const MixedStrategy& strategy, Player side) {
  const auto& labels = side == Player::kContestant ? m.row_labels() : m.col_labels();
  if (strategy.labels() != labels) {
    throw Error(ErrorCode::kInvalidArgument, "strategy labels do not match the matrix axis");
  }
  const Rational value = solve(m).value;
  if (side == Player::kContestant) {
    const auto v = row_payoffs(strategy.probs(), m);
    const Rational worst = *std::min_element(v.begin(), v.end());
    return {worst == value, worst, value};
  }
  const auto v = column_payoffs(m, strategy.probs());
  const Rational worst = *std::max_element(v.begin(), v.end());
  return {worst == value, worst, value};
}

ZeroSumSolution solve_by_indifference(const PayoffMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw Error(ErrorCode::kInvalidArgument, "indifference needs a square matrix");
  }
  // Unknowns (p_1..p_n, v): sum_r p_r M[r][c] - v = 0 for each c, sum p = 1.
  auto equalize = [n](const RationalMatrix& coeffs) -> RationalVector {
    RationalMatrix a;
    RationalVector b;
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector row(coeffs[k]);
      row.emplace_back(-1);
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
    RationalVector ones(n, 1);
    ones.emplace_back(0);
    a.push_back(std::move(ones));
    b.emplace_back(1);
    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol) throw Error(ErrorCode::kSingular, "indifference system is singular");
    return *sol;
  };
  RationalMatrix by_column;
  for (std::size_t c = 0; c < n; ++c) by_column.push_back(m.column(c));
  auto p = equalize(by_column);
  auto q = equalize(m.entries());
  const Rational vp = p.back();
  const Rational vq = q.back();
  p.pop_back();
  q.pop_back();
  for (const auto* vec : {&p, &q}) {
    for (const auto& x : *vec) {
      if (sgn(x) < 0) {
        throw Error(ErrorCode::kInfeasible,
                    "indifference solution has a negative probability: full-support hypothesis fails");
      }
    }
  }
  if (vp != vq) throw Error(ErrorCode::kInfeasible, "equalized values of the two sides differ");
  auto s = make_solution(m, vp, std::move(p), std::move(q), "indifference");
  if (!s.certificate_holds(m)) throw Error(ErrorCode::kInfeasible, "indifference solution is not optimal");
  return s;
}

ZeroSumSolution solve_by_inverse(const PayoffMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kInvalidArgument, "inverse formula needs a square matrix");
  const auto inv = inverse(m.entries());
  if (!inv) throw Error(ErrorCode::kSingular, "matrix is singular");
  RationalVector row_sums(n, 0);  // M^-1 1
  RationalVector col_sums(n, 0);  // 1^T M^-1
  Rational denom = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row_sums[i] += (*inv)[i][j];
      col_sums[j] += (*inv)[i][j];
      denom += (*inv)[i][j];
    }
  }
  if (sgn(denom) == 0) throw Error(ErrorCode::kSingular, "1^T M^-1 1 is zero");
  const Rational value = 1 / denom;
  RationalVector p(n);
  RationalVector q(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = col_sums[i] * value;
    q[i] = row_sums[i] * value;
    if (sgn(p[i]) < 0 || sgn(q[i]) < 0) {
      throw Error(ErrorCode::kInfeasible, "inverse formula gives a strategy outside the simplex");
    }
  }
  auto s = make_solution(m, value, std::move(p), std::move(q), "inverse");
  if (!s.certificate_holds(m) || solve(m).value != value) {
    throw Error(ErrorCode::kInfeasible, "inverse formula disagrees with the LP solution");
  }
  return s;
}

Rational solve_diagonal(const RationalVector& diagonal) {
  if (diagonal.empty()) throw Error(ErrorCode::kInvalidArgument, "empty diagonal");
  const int sign = sgn(diagonal.front());
  Rational reciprocal_sum = 0;
  for (const auto& d : diagonal) {
    if (sgn(d) == 0) throw Error(ErrorCode::kInvalidArgument, "diagonal entry is zero");
    if (sgn(d) != sign) {
      throw Error(ErrorCode::kInvalidArgument, "diagonal entries of mixed sign: formula inapplicable");
    }
    reciprocal_sum += 1 / d;
  }
  const Rational value = 1 / reciprocal_sum;
  std::vector<std::string> labels;
  std::vector<RationalVector> e(diagonal.size(), RationalVector(diagonal.size(), 0));
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    labels.push_back("d" + std::to_string(i + 1));
    e[i][i] = diagonal[i];
  }
  if (solve(PayoffMatrix(labels, labels, std::move(e))).value != value) {
    throw Error(ErrorCode::kInternal, "diagonal formula disagrees with the LP solution");
  }
  return value;
}

FullSupportReport verify_full_support_exclusion(const PayoffMatrix& m,
                                                const MixedStrategy& host_strategy) {
  if (host_strategy.labels() != m.col_labels()) {
    throw Error(ErrorCode::kInvalidArgument, "Host strategy labels do not match the matrix columns");
  }
  FullSupportReport report;
  report.fully_supported = host_strategy.fully_supported();
  const auto payoffs = column_payoffs(m, host_strategy.probs());
  report.best_response_value = *std::max_element(payoffs.begin(), payoffs.end());
  std::vector<bool> seen(m.rows(), false);
  for (const auto& rel : find_dominated(m, Axis::kRow, DominanceKind::kWeak)) {
    seen[rel.dominated] = true;
  }
  report.exclusion_holds = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!seen[r]) continue;
    const bool below = payoffs[r] < report.best_response_value;
    report.dominated.push_back({m.row_labels()[r], payoffs[r], below});
    report.exclusion_holds = report.exclusion_holds && below;
  }
  return report;
}

}  // namespace montyhall

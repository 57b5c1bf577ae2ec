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

#include "core/dominance.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace montyhall {

Axis parse_axis(std::string_view s) {
  if (s == "row" || s == "rows") return Axis::kRow;
  if (s == "column" || s == "col" || s == "columns") return Axis::kColumn;
  throw Error(ErrorCode::kInvalidArgument, "axis must be row or column");
}

DominanceKind parse_dominance_kind(std::string_view s) {
  if (s == "strict") return DominanceKind::kStrict;
  if (s == "weak") return DominanceKind::kWeak;
  throw Error(ErrorCode::kInvalidArgument, "dominance kind must be strict or weak");
}

ElimPolicy parse_elim_policy(std::string_view s) {
  if (s == "rows_then_columns" || s == "rows-then-columns") return ElimPolicy::kRowsThenColumns;
  if (s == "fixpoint") return ElimPolicy::kFixpoint;
  throw Error(ErrorCode::kInvalidArgument, "policy must be rows_then_columns or fixpoint");
}

std::string to_string(Axis a) { return a == Axis::kRow ? "row" : "column"; }
std::string to_string(DominanceKind k) { return k == DominanceKind::kStrict ? "strict" : "weak"; }
std::string to_string(ElimPolicy p) {
  return p == ElimPolicy::kRowsThenColumns ? "rows_then_columns" : "fixpoint";
}

namespace {

enum class Compare { kDominates, kEqual, kNone };

// Does a dominate b? "better" means larger when maximize is set.
Compare compare_vectors(const RationalVector& a, const RationalVector& b, bool maximize,
                        DominanceKind kind, std::optional<std::size_t>* witness) {
  bool any_strict = false;
  bool all_strict = true;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]) * (maximize ? 1 : -1);
    if (c < 0) return Compare::kNone;
    if (c > 0) {
      any_strict = true;
      if (!first) first = i;
    } else {
      all_strict = false;
    }
  }
  if (!any_strict) return Compare::kEqual;
  if (kind == DominanceKind::kStrict) {
    if (!all_strict) return Compare::kNone;
    witness->reset();
    return Compare::kDominates;
  }
  *witness = first;
  return Compare::kDominates;
}

std::vector<RationalVector> strategy_vectors(const PayoffMatrix& m, Axis axis) {
  std::vector<RationalVector> out;
  if (axis == Axis::kRow) {
    out = m.entries();
  } else {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  }
  return out;
}

}  // namespace

std::vector<DominanceRelation> find_dominated(const PayoffMatrix& matrix, Axis axis,
                                              DominanceKind kind) {
  const auto vecs = strategy_vectors(matrix, axis);
  const auto& labels = axis == Axis::kRow ? matrix.row_labels() : matrix.col_labels();
  const bool maximize = axis == Axis::kRow;
  std::vector<DominanceRelation> out;
  for (std::size_t a = 0; a < vecs.size(); ++a) {
    for (std::size_t b = 0; b < vecs.size(); ++b) {
      if (a == b) continue;
      std::optional<std::size_t> witness;
      if (compare_vectors(vecs[a], vecs[b], maximize, kind, &witness) == Compare::kDominates) {
        out.push_back({a, b, labels[a], labels[b], kind, witness});
      }
    }
  }
  return out;
}

namespace {

struct Candidate {
  std::size_t dominated;  // position within the current submatrix
  std::size_t dominator;
  std::string kind;
};

// Lowest-index dominated strategy of the current submatrix, if any.
std::optional<Candidate> next_elimination(const PayoffMatrix& m, Axis axis, DominanceKind kind) {
  const auto vecs = strategy_vectors(m, axis);
  const bool maximize = axis == Axis::kRow;
  for (std::size_t b = 0; b < vecs.size(); ++b) {
    for (std::size_t a = 0; a < vecs.size(); ++a) {
      if (a == b) continue;
      std::optional<std::size_t> witness;
      const auto c = compare_vectors(vecs[a], vecs[b], maximize, kind, &witness);
      if (c == Compare::kDominates) return Candidate{b, a, to_string(kind)};
      if (c == Compare::kEqual && kind == DominanceKind::kWeak && a < b) {
        return Candidate{b, a, "duplicate"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

EliminationTrace eliminate(const PayoffMatrix& matrix, ElimPolicy policy, DominanceKind kind) {
  EliminationTrace trace;
  for (std::size_t r = 0; r < matrix.rows(); ++r) trace.surviving_rows.push_back(r);
  for (std::size_t c = 0; c < matrix.cols(); ++c) trace.surviving_cols.push_back(c);

  // Removes one strategy on the axis; false if nothing is dominated.
  auto step_axis = [&](Axis axis) {
    const auto& survivors = axis == Axis::kRow ? trace.surviving_rows : trace.surviving_cols;
    if (survivors.size() <= 1) return false;
    const auto sub = matrix.submatrix(trace.surviving_rows, trace.surviving_cols);
    const auto cand = next_elimination(sub, axis, kind);
    if (!cand) return false;
    const auto& labels = axis == Axis::kRow ? sub.row_labels() : sub.col_labels();
    trace.steps.push_back({static_cast<int>(trace.steps.size()) + 1, axis,
                           labels[cand->dominated], labels[cand->dominator], cand->kind});
    auto& mutable_survivors = axis == Axis::kRow ? trace.surviving_rows : trace.surviving_cols;
    mutable_survivors.erase(mutable_survivors.begin() +
                            static_cast<std::ptrdiff_t>(cand->dominated));
    return true;
  };

  if (policy == ElimPolicy::kRowsThenColumns) {
    while (step_axis(Axis::kRow)) {
    }
    while (step_axis(Axis::kColumn)) {
    }
  } else {
    while (step_axis(Axis::kRow) || step_axis(Axis::kColumn)) {
    }
  }
  trace.reduced = matrix.submatrix(trace.surviving_rows, trace.surviving_cols);
  return trace;
}

std::string to_string(WinSetOrder o) {
  switch (o) {
    case WinSetOrder::kADominates: return "a_dominates";
    case WinSetOrder::kBDominates: return "b_dominates";
    case WinSetOrder::kIncomparable: return "incomparable";
    case WinSetOrder::kEqual: return "equal";
  }
  return "unknown";
}

std::set<int> guaranteed_win_set(const ContestantPureStrategy& s) {
  std::set<int> wins;
  for (Door car : all_doors()) {
    const bool always = play({car, Side::kLeft}, s).contestant_wins &&
                        play({car, Side::kRight}, s).contestant_wins;
    if (always) wins.insert(car.index());
  }
  return wins;
}

WinSetComparison win_set_compare(const ContestantPureStrategy& a,
                                 const ContestantPureStrategy& b) {
  WinSetComparison out{WinSetOrder::kIncomparable, guaranteed_win_set(a), guaranteed_win_set(b)};
  const bool a_covers = std::includes(out.a_wins.begin(), out.a_wins.end(), out.b_wins.begin(),
                                      out.b_wins.end());
  const bool b_covers = std::includes(out.b_wins.begin(), out.b_wins.end(), out.a_wins.begin(),
                                      out.a_wins.end());
  if (a_covers && b_covers) {
    out.order = WinSetOrder::kEqual;
  } else if (a_covers) {
    out.order = WinSetOrder::kADominates;
  } else if (b_covers) {
    out.order = WinSetOrder::kBDominates;
  }
  return out;
}

}  // namespace montyhall

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

#ifndef MONTYHALL_CORE_DOMINANCE_HPP_
#define MONTYHALL_CORE_DOMINANCE_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core/game.hpp"
#include "core/matrix.hpp"

namespace montyhall {

enum class Axis { kRow, kColumn };
enum class DominanceKind { kStrict, kWeak };
enum class ElimPolicy { kRowsThenColumns, kFixpoint };

Axis parse_axis(std::string_view s);
DominanceKind parse_dominance_kind(std::string_view s);
ElimPolicy parse_elim_policy(std::string_view s);
std::string to_string(Axis a);
std::string to_string(DominanceKind k);
std::string to_string(ElimPolicy p);

// Rows dominate by being >= (Contestant maximizes); columns by being <=
// (Host minimizes the Contestant payoff).
struct DominanceRelation {
  std::size_t dominator;
  std::size_t dominated;
  std::string dominator_label;
  std::string dominated_label;
  DominanceKind kind;
  // First coordinate with a strict inequality; empty for strict dominance.
  std::optional<std::size_t> witness;
};

// All ordered pairs on the axis where the first strategy dominates the second.
// Identical strategies are not reported (weak dominance needs a witness).
std::vector<DominanceRelation> find_dominated(const PayoffMatrix& matrix, Axis axis,
                                              DominanceKind kind);

struct EliminationStep {
  int step;
  Axis axis;
  std::string eliminated;
  std::string dominator;
  // "strict", "weak", or "duplicate" when an identical strategy with a lower
  // canonical position is kept instead.
  std::string kind;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  std::vector<std::size_t> surviving_rows;  // indices into the original matrix
  std::vector<std::size_t> surviving_cols;
  PayoffMatrix reduced;
};

// Iterated elimination, one strategy per step, re-evaluated on the surviving
// submatrix. The lowest-index dominated strategy goes first and its
// lowest-index dominator is recorded. Under weak elimination an exact
// duplicate of an earlier strategy is removed as "duplicate".
// kRowsThenColumns exhausts rows, then columns, then stops; kFixpoint
// alternates until neither axis changes.
EliminationTrace eliminate(const PayoffMatrix& matrix, ElimPolicy policy, DominanceKind kind);

enum class WinSetOrder { kADominates, kBDominates, kIncomparable, kEqual };
std::string to_string(WinSetOrder o);

struct WinSetComparison {
  WinSetOrder order;
  std::set<int> a_wins;
  std::set<int> b_wins;
};

// Car doors for which the strategy wins whatever side Host opens on a match.
std::set<int> guaranteed_win_set(const ContestantPureStrategy& s);

WinSetComparison win_set_compare(const ContestantPureStrategy& a, const ContestantPureStrategy& b);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_DOMINANCE_HPP_

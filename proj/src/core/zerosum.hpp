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

#ifndef MONTYHALL_CORE_ZEROSUM_HPP_
#define MONTYHALL_CORE_ZEROSUM_HPP_

#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/rational.hpp"
#include "core/strategy.hpp"

namespace montyhall {

// A value with an optimal pair and the payoff vectors that prove it:
// contestant_guarantee[c] = (P* M)_c >= value for every column and
// host_guarantee[r] = (M Q*^T)_r <= value for every row.
struct ZeroSumSolution {
  Rational value;
  MixedStrategy contestant_optimal;
  MixedStrategy host_optimal;
  RationalVector contestant_guarantee;
  RationalVector host_guarantee;
  std::string method;

  // Replays both guarantees exactly against the matrix.
  bool certificate_holds(const PayoffMatrix& m) const;
};

// Exact-rational simplex on the shifted game (Bland's rule, so degenerate
// ties resolve by canonical label order). The Host strategy is the primal
// solution and the Contestant strategy is read from the duals.
ZeroSumSolution solve(const PayoffMatrix& m);

// Extreme points of a player's optimal-strategy polytope.
struct MinimaxSet {
  Player side;
  Rational value;
  std::vector<MixedStrategy> vertices;
};

MinimaxSet enumerate_minimax(const PayoffMatrix& m, Player side);

struct MinimaxCheck {
  bool is_minimax;
  Rational worst_case;  // min over columns for Contestant, max over rows for Host
  Rational value;
};

// Throws Error(kInvalidArgument) if the strategy labels do not match the axis.
MinimaxCheck is_minimax(const PayoffMatrix& m, const MixedStrategy& strategy, Player side);

// Equalizer system under a full-support hypothesis on a square game.
// Throws Error(kInvalidArgument) for non-square input, Error(kSingular) when
// the equalizer system has no unique solution, Error(kInfeasible) when a
// probability comes out negative.
ZeroSumSolution solve_by_indifference(const PayoffMatrix& m);

// value = 1 / (1^T M^-1 1), P ~ 1^T M^-1, Q ~ M^-1 1.
// Throws Error(kSingular) for a singular matrix or zero denominator and
// Error(kInfeasible) when the result leaves the simplex or disagrees with solve().
ZeroSumSolution solve_by_inverse(const PayoffMatrix& m);

// Value of a diagonal game, (sum 1/d_i)^-1.
// Throws Error(kInvalidArgument) for an empty list, a zero entry or mixed signs.
Rational solve_diagonal(const RationalVector& diagonal);

struct DominatedStrategyCheck {
  std::string label;
  Rational payoff;
  bool strictly_below;
};

struct FullSupportReport {
  bool fully_supported;
  Rational best_response_value;
  std::vector<DominatedStrategyCheck> dominated;  // weakly dominated rows of the matrix
  // Every weakly dominated row earns strictly less than the best response.
  bool exclusion_holds;
};

FullSupportReport verify_full_support_exclusion(const PayoffMatrix& m,
                                                const MixedStrategy& host_strategy);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_ZEROSUM_HPP_

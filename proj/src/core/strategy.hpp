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

#ifndef MONTYHALL_CORE_STRATEGY_HPP_
#define MONTYHALL_CORE_STRATEGY_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "core/matrix.hpp"
#include "core/rational.hpp"

namespace montyhall {

enum class Player { kContestant, kHost };

Player parse_player(std::string_view s);
std::string to_string(Player p);

// A probability vector over an ordered list of pure-strategy labels.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws Error(kInvalidArgument) unless probs is a probability vector of the
  // same length as labels.
  MixedStrategy(std::vector<std::string> labels, RationalVector probs);

  static MixedStrategy pure(const std::vector<std::string>& labels, std::string_view which);
  static MixedStrategy uniform_over(const std::vector<std::string>& labels,
                                    const std::vector<std::string>& support);

  const std::vector<std::string>& labels() const { return labels_; }
  const RationalVector& probs() const { return probs_; }
  const Rational& prob(std::size_t i) const { return probs_[i]; }
  // Probability of a label; zero if it is not listed.
  Rational prob(std::string_view label) const;
  std::size_t size() const { return probs_.size(); }

  std::vector<std::string> support() const;
  bool fully_supported() const;

  bool operator==(const MixedStrategy&) const = default;

 private:
  std::vector<std::string> labels_;
  RationalVector probs_;
};

// Row vector x times the matrix: one payoff per column.
RationalVector row_payoffs(const RationalVector& x, const PayoffMatrix& m);
// Matrix times column vector y: one payoff per row.
RationalVector column_payoffs(const PayoffMatrix& m, const RationalVector& y);
// x M y^T.
Rational expected_payoff(const RationalVector& x, const PayoffMatrix& m, const RationalVector& y);

// Host mixture from car-placement probabilities pi and per-door conditional
// probabilities lambda of opening the Left door on a match:
// (pi1 l1, pi1 (1-l1), pi2 l2, pi2 (1-l2), pi3 l3, pi3 (1-l3)).
// Throws Error(kInvalidArgument) unless pi is a probability vector and every
// lambda lies in [0,1].
MixedStrategy host_from_marginal(const std::array<Rational, 3>& pi,
                                 const std::array<Rational, 3>& lambda);

// The minimax family member with uniform car placement.
MixedStrategy host_lambda_strategy(const std::array<Rational, 3>& lambda);

// The unconstrained 6-vector (l1/3, (1-l1)/3, ...), without range checks.
RationalVector lambda_expansion(const std::array<Rational, 3>& lambda);

// Car-placement marginal pi_X = q(XL) + q(XR) of a Host mixture on the 6 labels.
std::array<Rational, 3> car_marginal(const MixedStrategy& host);

// The uniform mixture of 1SS, 2SS, 3SS.
MixedStrategy contestant_minimax();

// Parses a strategy for the given side. Accepted forms:
//   a pure label                "1NN", "3R"
//   label:prob list             "1SS:1/3,2SS:1/3,3SS:1/3"
//   the named optimum           "P*"
//   lambda family member        "Q*:1/2,1/2,1/2"
//   marginal and lambda         "pi=1/2,1/3,1/6;lambda=1,1,1"
//   full probability vector     "1/6,1/6,1/6,1/6,1/6,1/6"
MixedStrategy parse_strategy(std::string_view text, Player side);

std::array<Rational, 3> parse_triple(std::string_view text);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_STRATEGY_HPP_

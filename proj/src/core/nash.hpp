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

#ifndef MONTYHALL_CORE_NASH_HPP_
#define MONTYHALL_CORE_NASH_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "core/strategy.hpp"

namespace montyhall {

struct NashEquilibrium {
  MixedStrategy contestant;
  MixedStrategy host;
  Rational contestant_payoff;
  Rational host_payoff;
  bool pure;
  // Index into NashSet::components; -1 for pure_nash results.
  int component = -1;
};

// A connected set of equilibria, given by its extreme equilibria. A component
// with more than one extreme equilibrium is a continuum.
struct NashComponent {
  std::vector<std::size_t> equilibria;  // indices into NashSet::equilibria
  bool continuum;
};

struct NashSet {
  std::vector<NashEquilibrium> equilibria;
  std::vector<NashComponent> components;
};

// Every cell where the Contestant payoff is a column maximum of the
// Contestant matrix and the Host payoff a row maximum of the Host matrix.
std::vector<NashEquilibrium> pure_nash(const Bimatrix& game);

// All extreme Nash equilibria, exactly.
//
// Both payoff matrices are shifted positive and the best-response polytopes
//   P = { x >= 0 : B^T x <= 1 },  Q = { y >= 0 : A y <= 1 }
// are enumerated over (support, tight best-response set) pairs. A vertex pair
// is an equilibrium iff every pure strategy is either unused or a best
// response, i.e. the pair is completely labelled. Equilibria are grouped into
// connected components of the extreme-equilibrium graph.
NashSet mixed_nash(const Bimatrix& game);

// No pure deviation improves either player's exact expected payoff.
bool is_nash_equilibrium(const Bimatrix& game, const MixedStrategy& contestant,
                         const MixedStrategy& host);

struct Exclusion {
  std::string strategy;
  std::string rule;  // "I", "II" or "NN"
  Rational payoff;
};

struct BestResponseReport {
  Rational value;
  std::vector<std::string> best_pure_set;  // complete argmax set, canonical order
  RationalVector payoffs;                  // per row
  std::vector<Exclusion> excluded;         // only on the Monty Hall Contestant matrix
  std::optional<std::array<Rational, 3>> pi;
};

// Throws Error(kInvalidArgument) if host is not a probability vector over the
// matrix columns.
BestResponseReport best_response(const PayoffMatrix& matrix, const MixedStrategy& host);

struct ResponseClassification {
  int theorem_case;                  // 1, 2 or 3
  std::vector<std::string> support;  // predicted support of the Contestant response
};

// Predicts the Contestant side of an equilibrium against a fully supported
// Host from the car marginal alone. Throws Error(kInvalidArgument) if
// host_fully_supported is false or pi is not a probability vector.
ResponseClassification classify_equilibrium_response(const std::array<Rational, 3>& pi,
                                                     bool host_fully_supported);

struct HostIndifferenceReport {
  RationalVector host_payoffs;  // P H, one per Host column
  bool constant;
  std::optional<Rational> constant_value;
  // 1, 2 or 3 when the Contestant strategy is supported on that many YSS rows,
  // 0 when it uses a strategy with a Notswitch action.
  int theorem_case;
};

HostIndifferenceReport verify_host_indifference(const PayoffMatrix& host_matrix,
                                                const MixedStrategy& contestant);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_NASH_HPP_

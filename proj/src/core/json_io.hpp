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

#ifndef MONTYHALL_CORE_JSON_IO_HPP_
#define MONTYHALL_CORE_JSON_IO_HPP_

#include <json.hpp>

#include "core/dominance.hpp"
#include "core/game.hpp"
#include "core/matrix.hpp"
#include "core/nash.hpp"
#include "core/simulate.hpp"
#include "core/strategy.hpp"
#include "core/zerosum.hpp"

namespace montyhall {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Rational rational_from_json(const Json& j);

Json to_json(const Playout& p);
Json to_json(const PayoffMatrix& m);
Json to_json(const Bimatrix& b);
Json to_json(const MixedStrategy& s);
Json to_json(const EliminationTrace& t);
Json to_json(const DominanceRelation& d);
Json to_json(const ZeroSumSolution& s);
Json to_json(const MinimaxSet& s);
Json to_json(const NashEquilibrium& e);
Json to_json(const NashSet& s);
Json to_json(const BestResponseReport& r);
Json to_json(const SimResult& r);
Json to_json(const FullSupportReport& r);
Json to_json(const HostIndifferenceReport& r);
Json to_json(const ResponseClassification& c);

// Matrix file format:
//   {"rows": [...], "cols": [...], "entries": [["p/q", ...], ...]}
// or for a bimatrix
//   {"rows": [...], "cols": [...], "contestant": [[...]], "host": [[...]]}
// Throws Error(kInvalidArgument) on schema violations.
PayoffMatrix matrix_from_json(const Json& j);
Bimatrix bimatrix_from_json(const Json& j);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_JSON_IO_HPP_

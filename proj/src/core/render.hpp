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

#ifndef MONTYHALL_CORE_RENDER_HPP_
#define MONTYHALL_CORE_RENDER_HPP_

#include <string>

#include "core/matrix.hpp"
#include "core/strategy.hpp"

namespace montyhall {

// Aligned text table in the layout of the printed matrices: a header row of
// Host labels, then one line per Contestant strategy. Monty Hall row groups
// are separated by a blank line when group_by_door is set.
std::string render_table(const PayoffMatrix& m, bool group_by_door = false);
std::string render_table(const Bimatrix& b, bool group_by_door = false);

// First line is "" followed by the column labels; entries as p/q.
std::string render_csv(const PayoffMatrix& m);
// Cells are "c;h".
std::string render_csv(const Bimatrix& b);

// "(1/3, 0, ...)" in label order.
std::string render_vector(const RationalVector& v);
// "1SS:1/3, 2SS:1/3" over the support only.
std::string render_support(const MixedStrategy& s);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_RENDER_HPP_

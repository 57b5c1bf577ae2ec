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

#ifndef MONTYHALL_CORE_RATIONAL_HPP_
#define MONTYHALL_CORE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace montyhall {

// Every payoff, probability and game value in the engine is an exact rational.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p/q", "p" or "-p/q". Throws Error(kInvalidArgument) on anything else,
// including a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

// Parses a comma-separated list of rationals, e.g. "1/2,1/3,1/6".
RationalVector parse_rational_list(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational sum(const RationalVector& values);

// True if every entry is >= 0 and the entries sum to exactly one.
bool is_probability_vector(const RationalVector& values);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_RATIONAL_HPP_

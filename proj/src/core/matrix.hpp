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

#ifndef MONTYHALL_CORE_MATRIX_HPP_
#define MONTYHALL_CORE_MATRIX_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/game.hpp"
#include "core/rational.hpp"

namespace montyhall {

// A labelled matrix of exact payoffs. Rows belong to the maximizing player in
// zero-sum use (Contestant), columns to the minimizer (Host).
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  // Throws Error(kInvalidArgument) on ragged or empty input, label/shape
  // mismatch, or duplicate labels.
  PayoffMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<RationalVector> entries);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  const RationalVector& row(std::size_t r) const { return entries_[r]; }
  RationalVector column(std::size_t c) const;
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<RationalVector>& entries() const { return entries_; }

  // Throws Error(kNotFound) for unknown labels.
  std::size_t row_index(std::string_view label) const;
  std::size_t col_index(std::string_view label) const;
  const Rational& at(std::string_view row_label, std::string_view col_label) const {
    return at(row_index(row_label), col_index(col_label));
  }

  PayoffMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;
  PayoffMatrix negated() const;
  PayoffMatrix transposed() const;
  // Adds the same constant to every entry.
  PayoffMatrix shifted(const Rational& delta) const;

  // True when the labels are the canonical 12 Contestant / 6 Host labels.
  bool is_monty_hall_grid() const;

  bool operator==(const PayoffMatrix&) const = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<RationalVector> entries_;
};

struct Bimatrix {
  PayoffMatrix contestant;
  PayoffMatrix host;

  // Throws Error(kInvalidArgument) if the two components differ in shape or labels.
  static Bimatrix make(PayoffMatrix contestant, PayoffMatrix host);

  bool operator==(const Bimatrix&) const = default;
};

// The Contestant win-indicator matrix over the 12x6 grid, built by playout.
PayoffMatrix build_contestant_matrix();

enum class HostKind { kZeroSum, kSympathetic, kIndifferent, kMaverick, kSuperstitious };

// Accepts zero_sum, sympathetic, indifferent, maverick, superstitious and the
// fixture aliases zerosum, alpha, beta, gamma, delta.
// Throws Error(kUnknownFixture).
HostKind parse_host_kind(std::string_view name);
std::string to_string(HostKind kind);

Bimatrix build_host_matrix(HostKind kind);

// One cell of a bimatrix: (Contestant payoff, Host payoff).
using PayoffPair = std::pair<Rational, Rational>;

// Rows of a bimatrix given by Contestant label; each row lists the 6 Host
// columns in canonical order.
using PartialBimatrix = std::map<std::string, std::vector<PayoffPair>>;

// The relabelling that sends door 1 to the given door and keeps the Left/Right
// orientation of the two doors beside door 1: identity for door 1, the swap of
// 1 and 2 for door 2, and 1->3, 2->1, 3->2 for door 3.
DoorPermutation orientation_preserving_map(Door target);

// Image of one row under a door relabelling: result is the row
// sigma(row_label), with column sigma(c) holding the source cell at c.
std::vector<PayoffPair> permute_row(const std::vector<PayoffPair>& row,
                                    const DoorPermutation& sigma);

// Completes a bimatrix from the four door-1 rows by door exchangeability.
// Rows for doors 2 and 3 are the images of the door-1 rows under
// orientation_preserving_map. Any extra rows supplied (e.g. the printed 2SS
// row) must agree cell-for-cell with their derived images.
// Throws Error(kInvalidArgument) if a door-1 row is missing, a row has the
// wrong width, or a supplied row disagrees with its derived image.
Bimatrix exchangeability_extend(const PartialBimatrix& partial);

// The printed five-row tables for the maverick and superstitious Hosts.
const PartialBimatrix& maverick_partial();
const PartialBimatrix& superstitious_partial();

// Applies a door relabelling to a matrix on the Monty Hall grid:
// result(sigma(r), sigma(c)) = m(r, c).
PayoffMatrix permute(const PayoffMatrix& m, const DoorPermutation& sigma);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_MATRIX_HPP_

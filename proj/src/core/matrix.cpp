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

#include "core/matrix.hpp"

#include <set>

#include "core/error.hpp"

namespace montyhall {

PayoffMatrix::PayoffMatrix(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           std::vector<RationalVector> entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
  if (row_labels_.empty() || col_labels_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "payoff matrix must be non-empty");
  }
  if (entries_.size() != row_labels_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "row count does not match row labels");
  }
  for (const auto& row : entries_) {
    if (row.size() != col_labels_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "column count does not match column labels");
    }
  }
  for (const auto* labels : {&row_labels_, &col_labels_}) {
    if (std::set<std::string>(labels->begin(), labels->end()).size() != labels->size()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate strategy label");
    }
  }
}

RationalVector PayoffMatrix::column(std::size_t c) const {
  RationalVector out;
  out.reserve(rows());
  for (const auto& row : entries_) out.push_back(row[c]);
  return out;
}

namespace {

std::size_t find_label(const std::vector<std::string>& labels, std::string_view label) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw Error(ErrorCode::kNotFound, "unknown strategy label '" + std::string(label) + "'");
}

}  // namespace

std::size_t PayoffMatrix::row_index(std::string_view label) const {
  return find_label(row_labels_, label);
}

std::size_t PayoffMatrix::col_index(std::string_view label) const {
  return find_label(col_labels_, label);
}

PayoffMatrix PayoffMatrix::submatrix(const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
  std::vector<std::string> rl;
  std::vector<std::string> cl;
  std::vector<RationalVector> e;
  for (auto c : cols) cl.push_back(col_labels_.at(c));
  for (auto r : rows) {
    rl.push_back(row_labels_.at(r));
    RationalVector row;
    for (auto c : cols) row.push_back(entries_.at(r).at(c));
    e.push_back(std::move(row));
  }
  return PayoffMatrix(std::move(rl), std::move(cl), std::move(e));
}

PayoffMatrix PayoffMatrix::negated() const {
  auto e = entries_;
  for (auto& row : e) {
    for (auto& x : row) x = -x;
  }
  return PayoffMatrix(row_labels_, col_labels_, std::move(e));
}

PayoffMatrix PayoffMatrix::transposed() const {
  std::vector<RationalVector> e(cols(), RationalVector(rows()));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) e[c][r] = entries_[r][c];
  }
  return PayoffMatrix(col_labels_, row_labels_, std::move(e));
}

PayoffMatrix PayoffMatrix::shifted(const Rational& delta) const {
  auto e = entries_;
  for (auto& row : e) {
    for (auto& x : row) x += delta;
  }
  return PayoffMatrix(row_labels_, col_labels_, std::move(e));
}

bool PayoffMatrix::is_monty_hall_grid() const {
  return row_labels_ == contestant_labels() && col_labels_ == host_labels();
}

Bimatrix Bimatrix::make(PayoffMatrix contestant, PayoffMatrix host) {
  if (contestant.row_labels() != host.row_labels() ||
      contestant.col_labels() != host.col_labels()) {
    throw Error(ErrorCode::kInvalidArgument, "bimatrix components must share labels and shape");
  }
  return Bimatrix{std::move(contestant), std::move(host)};
}

PayoffMatrix build_contestant_matrix() {
  std::vector<RationalVector> e;
  for (const auto& c : contestant_strategies()) {
    RationalVector row;
    for (const auto& h : host_strategies()) row.emplace_back(play(h, c).contestant_wins ? 1 : 0);
    e.push_back(std::move(row));
  }
  return PayoffMatrix(contestant_labels(), host_labels(), std::move(e));
}

HostKind parse_host_kind(std::string_view name) {
  if (name == "zero_sum" || name == "zerosum") return HostKind::kZeroSum;
  if (name == "sympathetic" || name == "alpha") return HostKind::kSympathetic;
  if (name == "indifferent" || name == "beta") return HostKind::kIndifferent;
  if (name == "maverick" || name == "gamma") return HostKind::kMaverick;
  if (name == "superstitious" || name == "delta") return HostKind::kSuperstitious;
  throw Error(ErrorCode::kUnknownFixture, "unknown Host kind '" + std::string(name) + "'");
}

std::string to_string(HostKind kind) {
  switch (kind) {
    case HostKind::kZeroSum: return "zero_sum";
    case HostKind::kSympathetic: return "sympathetic";
    case HostKind::kIndifferent: return "indifferent";
    case HostKind::kMaverick: return "maverick";
    case HostKind::kSuperstitious: return "superstitious";
  }
  return "unknown";
}

Bimatrix build_host_matrix(HostKind kind) {
  PayoffMatrix c = build_contestant_matrix();
  switch (kind) {
    case HostKind::kZeroSum:
      return Bimatrix::make(c, c.negated());
    case HostKind::kSympathetic:
      return Bimatrix::make(c, c);
    case HostKind::kIndifferent:
      return Bimatrix::make(
          c, PayoffMatrix(c.row_labels(), c.col_labels(),
                          std::vector<RationalVector>(c.rows(), RationalVector(c.cols(), 0))));
    case HostKind::kMaverick:
      return exchangeability_extend(maverick_partial());
    case HostKind::kSuperstitious:
      return exchangeability_extend(superstitious_partial());
  }
  throw Error(ErrorCode::kInternal, "unhandled Host kind");
}

DoorPermutation orientation_preserving_map(Door target) {
  switch (target.index()) {
    case 1: return DoorPermutation({1, 2, 3});
    case 2: return DoorPermutation({2, 1, 3});
    default: return DoorPermutation({3, 1, 2});
  }
}

std::vector<PayoffPair> permute_row(const std::vector<PayoffPair>& row,
                                    const DoorPermutation& sigma) {
  if (row.size() != host_strategies().size()) {
    throw Error(ErrorCode::kInvalidArgument, "bimatrix row must have 6 Host columns");
  }
  std::vector<PayoffPair> out(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) {
    out[index_of(sigma.apply(host_strategies()[c]))] = row[c];
  }
  return out;
}

Bimatrix exchangeability_extend(const PartialBimatrix& partial) {
  std::vector<std::vector<PayoffPair>> full(contestant_strategies().size());
  for (const auto& base : contestant_strategies()) {
    if (base.pick != Door(1)) continue;
    const auto label = to_string(base);
    const auto it = partial.find(label);
    if (it == partial.end()) {
      throw Error(ErrorCode::kInvalidArgument, "partial bimatrix is missing row " + label);
    }
    for (Door target : all_doors()) {
      const auto sigma = orientation_preserving_map(target);
      full[index_of(sigma.apply(base))] = permute_row(it->second, sigma);
    }
  }
  for (const auto& [label, row] : partial) {
    const auto& derived = full[index_of(parse_contestant_strategy(label))];
    if (row.size() != derived.size()) {
      throw Error(ErrorCode::kInvalidArgument, "row " + label + " must have 6 Host columns");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != derived[c]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "inconsistent partial bimatrix: row " + label + " column " + host_labels()[c] +
                        " disagrees with its exchangeability image");
      }
    }
  }
  std::vector<RationalVector> ce;
  std::vector<RationalVector> he;
  for (const auto& row : full) {
    RationalVector cr;
    RationalVector hr;
    for (const auto& [cv, hv] : row) {
      cr.push_back(cv);
      hr.push_back(hv);
    }
    ce.push_back(std::move(cr));
    he.push_back(std::move(hr));
  }
  return Bimatrix::make(PayoffMatrix(contestant_labels(), host_labels(), std::move(ce)),
                        PayoffMatrix(contestant_labels(), host_labels(), std::move(he)));
}

namespace {

std::vector<PayoffPair> pairs(std::initializer_list<std::pair<int, int>> cells) {
  std::vector<PayoffPair> out;
  for (const auto& [c, h] : cells) out.emplace_back(Rational(c), Rational(h));
  return out;
}

}  // namespace

const PartialBimatrix& maverick_partial() {
  static const PartialBimatrix table{
      {"1SS", pairs({{0, 0}, {0, 0}, {1, -1}, {1, -1}, {1, -1}, {1, -1}})},
      {"1SN", pairs({{0, 0}, {1, -1}, {0, 0}, {0, 0}, {1, -1}, {1, -1}})},
      {"1NS", pairs({{1, 4}, {0, 4}, {1, 3}, {1, 3}, {0, 2}, {0, 2}})},
      {"1NN", pairs({{1, 5}, {1, 4}, {0, 3}, {0, 3}, {0, 2}, {0, 2}})},
      {"2SS", pairs({{1, -1}, {1, -1}, {0, 0}, {0, 0}, {1, -1}, {1, -1}})},
  };
  return table;
}

const PartialBimatrix& superstitious_partial() {
  static const PartialBimatrix table{
      {"1SS", pairs({{0, 0}, {0, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}})},
      {"1SN", pairs({{0, 0}, {1, -2}, {0, 0}, {0, 0}, {1, -1}, {1, -1}})},
      {"1NS", pairs({{1, -1}, {0, -1}, {1, -1}, {1, -1}, {0, 0}, {0, 0}})},
      {"1NN", pairs({{1, -1}, {1, -2}, {0, 0}, {0, 0}, {0, 0}, {0, 0}})},
      {"2SS", pairs({{1, -1}, {1, -1}, {0, 0}, {0, -1}, {1, -1}, {1, -1}})},
  };
  return table;
}

PayoffMatrix permute(const PayoffMatrix& m, const DoorPermutation& sigma) {
  if (!m.is_monty_hall_grid()) {
    throw Error(ErrorCode::kInvalidArgument, "door relabelling needs the 12x6 Monty Hall grid");
  }
  std::vector<RationalVector> e(m.rows(), RationalVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto pr = index_of(sigma.apply(contestant_strategies()[r]));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      e[pr][index_of(sigma.apply(host_strategies()[c]))] = m.at(r, c);
    }
  }
  return PayoffMatrix(m.row_labels(), m.col_labels(), std::move(e));
}

}  // namespace montyhall

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

#include <doctest.h>

#include <algorithm>

#include "core/dominance.hpp"
#include "core/zerosum.hpp"
#include "oracles.hpp"

using namespace montyhall;

namespace {

bool has(const std::vector<DominanceRelation>& rels, const std::string& a, const std::string& b) {
  return std::any_of(rels.begin(), rels.end(), [&](const DominanceRelation& r) {
    return r.dominator_label == a && r.dominated_label == b;
  });
}

}  // namespace

TEST_SUITE("dominance") {
  TEST_CASE("weak row dominance on the contestant matrix") {
    const auto rels = find_dominated(build_contestant_matrix(), Axis::kRow, DominanceKind::kWeak);
    CHECK(has(rels, "1SS", "2SN"));
    CHECK(has(rels, "1SS", "2NN"));
    CHECK(has(rels, "3SS", "2NS"));
    for (const auto& r : rels) {
      REQUIRE(r.witness.has_value());
      CHECK(r.kind == DominanceKind::kWeak);
    }
  }

  TEST_CASE("no strict dominance among the 132 ordered row pairs") {
    const auto c = build_contestant_matrix();
    int strict_pairs = 0;
    for (std::size_t a = 0; a < 12; ++a) {
      for (std::size_t b = 0; b < 12; ++b) {
        if (a == b) continue;
        bool all = true;
        for (std::size_t k = 0; k < 6; ++k) {
          all = all && oracle::kGoldenTable[a][k] > oracle::kGoldenTable[b][k];
        }
        strict_pairs += all ? 1 : 0;
      }
    }
    CHECK(strict_pairs == 0);
    CHECK(find_dominated(c, Axis::kRow, DominanceKind::kStrict).empty());
    CHECK(eliminate(c, ElimPolicy::kFixpoint, DominanceKind::kStrict).steps.empty());
  }

  TEST_CASE("weak relations match a brute-force pair scan") {
    const auto rels = find_dominated(build_contestant_matrix(), Axis::kRow, DominanceKind::kWeak);
    std::size_t expected = 0;
    for (std::size_t a = 0; a < 12; ++a) {
      for (std::size_t b = 0; b < 12; ++b) {
        if (a == b) continue;
        bool ge = true;
        bool gt = false;
        for (std::size_t k = 0; k < 6; ++k) {
          ge = ge && oracle::kGoldenTable[a][k] >= oracle::kGoldenTable[b][k];
          gt = gt || oracle::kGoldenTable[a][k] > oracle::kGoldenTable[b][k];
        }
        if (ge && gt) {
          ++expected;
          CHECK(has(rels, oracle::kRows[a], oracle::kRows[b]));
        }
      }
    }
    CHECK(rels.size() == expected);
  }

  TEST_CASE("weak elimination leaves the switching 3x3 core") {
    const auto c = build_contestant_matrix();
    const auto t = eliminate(c, ElimPolicy::kRowsThenColumns, DominanceKind::kWeak);
    CHECK(t.reduced.row_labels() == std::vector<std::string>{"1SS", "2SS", "3SS"});
    CHECK(t.reduced.col_labels() == std::vector<std::string>{"1L", "2L", "3L"});
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(t.reduced.at(i, j) == (i == j ? 0 : 1));
    }
    for (const auto& label : c.row_labels()) {
      if (label.substr(1) == "SS") continue;
      CHECK(std::count_if(t.steps.begin(), t.steps.end(), [&](const EliminationStep& s) {
              return s.eliminated == label && s.axis == Axis::kRow;
            }) == 1);
    }
    std::size_t columns = 0;
    for (const auto& s : t.steps) {
      if (s.axis == Axis::kColumn) {
        ++columns;
        CHECK(s.kind == "duplicate");
        CHECK(s.eliminated[1] == 'R');
        CHECK(s.dominator == s.eliminated.substr(0, 1) + "L");
      }
    }
    CHECK(columns == 3);
  }

  TEST_CASE("fixpoint policy reaches the same core") {
    const auto a = eliminate(build_contestant_matrix(), ElimPolicy::kFixpoint, DominanceKind::kWeak);
    CHECK(a.reduced.row_labels() == std::vector<std::string>{"1SS", "2SS", "3SS"});
    CHECK(a.reduced.cols() == 3);
  }

  TEST_CASE("elimination soundness replayed from the trace") {
    const auto c = build_contestant_matrix();
    const auto t = eliminate(c, ElimPolicy::kRowsThenColumns, DominanceKind::kWeak);
    std::vector<std::string> rows = c.row_labels();
    std::vector<std::string> cols = c.col_labels();
    for (const auto& s : t.steps) {
      if (s.axis == Axis::kRow) {
        for (const auto& col : cols) CHECK(c.at(s.dominator, col) >= c.at(s.eliminated, col));
        rows.erase(std::find(rows.begin(), rows.end(), s.eliminated));
      } else {
        for (const auto& row : rows) CHECK(c.at(row, s.dominator) <= c.at(row, s.eliminated));
        cols.erase(std::find(cols.begin(), cols.end(), s.eliminated));
      }
    }
    // On the three surviving rows the XL and XR columns coincide.
    for (int x = 1; x <= 3; ++x) {
      for (const auto& row : rows) {
        CHECK(c.at(row, std::to_string(x) + "L") == c.at(row, std::to_string(x) + "R"));
      }
    }
  }

  TEST_CASE("elimination preserves the value") {
    const auto c = build_contestant_matrix();
    const auto t = eliminate(c, ElimPolicy::kRowsThenColumns, DominanceKind::kWeak);
    CHECK(solve(c).value == solve(t.reduced).value);
  }

  TEST_CASE("single cell has nothing to eliminate") {
    const PayoffMatrix one({"r"}, {"c"}, {{5}});
    const auto t = eliminate(one, ElimPolicy::kFixpoint, DominanceKind::kWeak);
    CHECK(t.steps.empty());
    CHECK(t.reduced == one);
  }

  TEST_CASE("win set comparisons") {
    const auto nn = parse_contestant_strategy("1NN");
    const auto ss2 = parse_contestant_strategy("2SS");
    const auto ss1 = parse_contestant_strategy("1SS");
    auto r = win_set_compare(nn, ss2);
    CHECK(r.order == WinSetOrder::kBDominates);
    CHECK(r.a_wins == std::set<int>{1});
    CHECK(r.b_wins == std::set<int>{1, 3});
    CHECK(win_set_compare(ss1, ss1).order == WinSetOrder::kEqual);
    r = win_set_compare(ss1, nn);
    CHECK(r.order == WinSetOrder::kIncomparable);
    CHECK(r.a_wins == std::set<int>{2, 3});
    CHECK(r.b_wins == std::set<int>{1});
  }

  TEST_CASE("parsers") {
    CHECK(parse_dominance_kind("strict") == DominanceKind::kStrict);
    CHECK(parse_elim_policy("fixpoint") == ElimPolicy::kFixpoint);
    CHECK(parse_axis("column") == Axis::kColumn);
    CHECK_THROWS(parse_dominance_kind("sometimes"));
  }
}

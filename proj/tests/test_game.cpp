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

#include <set>

#include "core/error.hpp"
#include "core/game.hpp"
#include "oracles.hpp"

using namespace montyhall;

TEST_SUITE("game_core") {
  TEST_CASE("side is relative to the pick") {
    CHECK(side_of(Door(2), Door(1)) == Side::kLeft);
    CHECK(side_of(Door(2), Door(3)) == Side::kRight);
    CHECK(side_of(Door(1), Door(2)) == Side::kLeft);
    CHECK(side_of(Door(1), Door(3)) == Side::kRight);
    CHECK(side_of(Door(3), Door(1)) == Side::kLeft);
    CHECK_THROWS_AS(side_of(Door(2), Door(2)), Error);
  }

  TEST_CASE("doors outside 1..3 are rejected") {
    CHECK_THROWS_AS(Door(0), Error);
    CHECK_THROWS_AS(Door(4), Error);
  }

  TEST_CASE("canonical strategy lists") {
    REQUIRE(host_labels().size() == 6);
    REQUIRE(contestant_labels().size() == 12);
    for (std::size_t i = 0; i < 6; ++i) CHECK(host_labels()[i] == oracle::kCols[i]);
    for (std::size_t i = 0; i < 12; ++i) CHECK(contestant_labels()[i] == oracle::kRows[i]);
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(to_string(parse_contestant_strategy(oracle::kRows[i])) == oracle::kRows[i]);
      CHECK(index_of(contestant_strategies()[i]) == i);
    }
    CHECK_THROWS_AS(parse_host_strategy("4L"), Error);
    CHECK_THROWS_AS(parse_contestant_strategy("1XS"), Error);
  }

  TEST_CASE("worked playouts") {
    const auto a = play(parse_host_strategy("1R"), parse_contestant_strategy("2SN"));
    CHECK(a.revealed == Door(3));
    CHECK(a.revealed_side == Side::kRight);
    CHECK(a.final_choice == Door(2));
    CHECK_FALSE(a.contestant_wins);

    const auto b = play(parse_host_strategy("1L"), parse_contestant_strategy("1NN"));
    CHECK(b.revealed == Door(2));
    CHECK(b.final_choice == Door(1));
    CHECK(b.contestant_wins);

    const auto c = play(parse_host_strategy("3L"), parse_contestant_strategy("1SS"));
    CHECK(c.revealed == Door(2));
    CHECK(c.revealed_side == Side::kLeft);
    CHECK(c.final_choice == Door(3));
    CHECK(c.contestant_wins);

    CHECK(reveal_for(parse_host_strategy("2L"), Door(2)) == Door(1));
    CHECK(reveal_for(parse_host_strategy("3L"), Door(1)) == Door(2));
  }

  TEST_CASE("all 72 profiles agree with the rule oracle and stay legal") {
    for (const auto& h : host_strategies()) {
      for (const auto& c : contestant_strategies()) {
        const auto p = play(h, c);
        const auto o = oracle::play(to_string(h), to_string(c));
        CAPTURE(to_string(h));
        CAPTURE(to_string(c));
        CHECK(p.revealed.index() == o.revealed);
        CHECK((p.revealed_side == Side::kLeft) == o.left);
        CHECK(p.final_choice.index() == o.final_door);
        CHECK(p.contestant_wins == o.win);
        CHECK(p.revealed != p.pick);
        CHECK(p.revealed != p.car_door);
        CHECK((p.final_choice == p.pick || p.final_choice == third_door(p.pick, p.revealed)));
        CHECK(p.contestant_wins == (p.final_choice == p.car_door));
        CHECK(play(h, c) == p);
      }
    }
  }

  TEST_CASE("mismatch reveal ignores the match side") {
    for (Door car : all_doors()) {
      for (Door pick : all_doors()) {
        if (car == pick) continue;
        const auto l = reveal_for({car, Side::kLeft}, pick);
        const auto r = reveal_for({car, Side::kRight}, pick);
        CHECK(l == r);
        CHECK(l == third_door(car, pick));
      }
    }
  }

  TEST_CASE("door permutations form S3 and act bijectively") {
    const auto& group = DoorPermutation::all();
    REQUIRE(group.size() == 6);
    std::set<std::string> images;
    for (const auto& g : group) images.insert(g.to_string());
    CHECK(images.size() == 6);
    for (const auto& g : group) {
      std::set<std::size_t> hs;
      std::set<std::size_t> cs;
      for (const auto& h : host_strategies()) hs.insert(index_of(g.apply(h)));
      for (const auto& c : contestant_strategies()) cs.insert(index_of(g.apply(c)));
      CHECK(hs.size() == 6);
      CHECK(cs.size() == 12);
      // Relabelling doors never changes who wins.
      for (const auto& h : host_strategies()) {
        for (const auto& c : contestant_strategies()) {
          CHECK(play(g.apply(h), g.apply(c)).contestant_wins == play(h, c).contestant_wins);
        }
      }
    }
    const auto s = DoorPermutation::swap(1, 2);
    CHECK(to_string(s.apply(parse_host_strategy("1L"))) == "2L");
    CHECK(to_string(s.apply(parse_contestant_strategy("1SS"))) == "2SS");
    CHECK(DoorPermutation::identity().apply(parse_host_strategy("3R")) == parse_host_strategy("3R"));
  }
}

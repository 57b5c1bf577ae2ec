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
#include <random>

#include "core/dominance.hpp"
#include "core/error.hpp"
#include "core/zerosum.hpp"
#include "oracles.hpp"

using namespace montyhall;

namespace {

const Rational kTwoThirds(2, 3);

PayoffMatrix reduced() {
  return eliminate(build_contestant_matrix(), ElimPolicy::kRowsThenColumns, DominanceKind::kWeak)
      .reduced;
}

PayoffMatrix square(std::vector<RationalVector> e) {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < e.size(); ++i) {
    rows.push_back("r" + std::to_string(i));
    cols.push_back("c" + std::to_string(i));
  }
  return PayoffMatrix(rows, cols, std::move(e));
}

RationalVector uniform3() { return {Rational(1, 3), Rational(1, 3), Rational(1, 3)}; }

std::vector<std::array<Rational, 3>> corner_lambdas() {
  std::vector<std::array<Rational, 3>> out;
  for (int mask = 0; mask < 8; ++mask) {
    out.push_back({(mask >> 2) & 1, (mask >> 1) & 1, mask & 1});
  }
  return out;
}

}  // namespace

TEST_SUITE("solver_zerosum") {
  TEST_CASE("contestant matrix value and optimal pair") {
    const auto c = build_contestant_matrix();
    const auto s = solve(c);
    CHECK(s.value == kTwoThirds);
    CHECK(s.contestant_optimal == contestant_minimax());
    CHECK(s.certificate_holds(c));
    CHECK(*std::min_element(s.contestant_guarantee.begin(), s.contestant_guarantee.end()) == s.value);
    CHECK(*std::max_element(s.host_guarantee.begin(), s.host_guarantee.end()) == s.value);
  }

  TEST_CASE("reduced core and trivial games") {
    const auto s = solve(reduced());
    CHECK(s.value == kTwoThirds);
    CHECK(s.contestant_optimal.probs() == uniform3());
    CHECK(s.host_optimal.probs() == uniform3());
    const auto one = solve(square({{5}}));
    CHECK(one.value == 5);
    CHECK(one.contestant_optimal.probs() == RationalVector{1});
  }

  TEST_CASE("LP duality holds exactly on random games") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + trial % 5;
      const std::size_t cols = 1 + (trial / 5) % 6;
      std::vector<RationalVector> e(rows, RationalVector(cols));
      std::vector<std::vector<oracle::Q>> raw(rows, std::vector<oracle::Q>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) raw[i][j] = e[i][j] = Rational(d(rng), 1 + trial % 3);
      }
      std::vector<std::string> rl;
      std::vector<std::string> cl;
      for (std::size_t i = 0; i < rows; ++i) rl.push_back("r" + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) cl.push_back("c" + std::to_string(j));
      const PayoffMatrix m(rl, cl, e);
      const auto s = solve(m);
      CHECK(s.certificate_holds(m));
      CHECK(oracle::certifies(raw, s.contestant_optimal.probs(), s.host_optimal.probs(), s.value));
    }
  }

  TEST_CASE("contestant minimax strategy is unique") {
    const auto set = enumerate_minimax(build_contestant_matrix(), Player::kContestant);
    CHECK(set.value == kTwoThirds);
    REQUIRE(set.vertices.size() == 1);
    CHECK(set.vertices[0] == contestant_minimax());
  }

  TEST_CASE("host minimax vertices are the eight corner expansions") {
    const auto set = enumerate_minimax(build_contestant_matrix(), Player::kHost);
    REQUIRE(set.vertices.size() == 8);
    for (const auto& l : corner_lambdas()) {
      const auto q = host_lambda_strategy(l);
      CHECK(std::count(set.vertices.begin(), set.vertices.end(), q) == 1);
    }
  }

  TEST_CASE("reduced core has a unique uniform row strategy") {
    const auto set = enumerate_minimax(reduced(), Player::kContestant);
    REQUIRE(set.vertices.size() == 1);
    CHECK(set.vertices[0].probs() == uniform3());
    const auto shifted = enumerate_minimax(reduced().shifted(-1), Player::kContestant);
    REQUIRE(shifted.vertices.size() == 1);
    CHECK(shifted.vertices[0].probs() == uniform3());
    CHECK(shifted.value == Rational(-1, 3));
  }

  TEST_CASE("minimax membership checks") {
    const auto c = build_contestant_matrix();
    CHECK(is_minimax(c, host_lambda_strategy({Rational(1, 2), Rational(1, 2), Rational(1, 2)}), Player::kHost)
              .is_minimax);
    CHECK(host_lambda_strategy({1, 1, 1}).probs() ==
          RationalVector{Rational(1, 3), 0, Rational(1, 3), 0, Rational(1, 3), 0});
    CHECK(is_minimax(c, host_lambda_strategy({1, 1, 1}), Player::kHost).is_minimax);
    const auto pure = is_minimax(c, MixedStrategy::pure(host_labels(), "1L"), Player::kHost);
    CHECK_FALSE(pure.is_minimax);
    CHECK(pure.worst_case == 1);
    CHECK(c.at("3SS", "1L") == 1);
    CHECK_THROWS_AS(is_minimax(c, MixedStrategy::pure(contestant_labels(), "1SS"), Player::kHost), Error);
  }

  TEST_CASE("random lambda triples stay minimax") {
    std::mt19937_64 rng(77);
    const auto c = build_contestant_matrix();
    for (int i = 0; i < 10; ++i) {
      const std::array<Rational, 3> l{oracle::random_unit(rng), oracle::random_unit(rng),
                                      oracle::random_unit(rng)};
      CHECK(is_minimax(c, host_lambda_strategy(l), Player::kHost).is_minimax);
    }
    const auto outside = lambda_expansion({Rational(3, 2), 0, 0});
    CHECK_FALSE(is_probability_vector(outside));
    CHECK_THROWS_AS(host_lambda_strategy({Rational(-1, 4), 0, 0}), Error);
  }

  TEST_CASE("convex combinations of host vertices stay minimax") {
    std::mt19937_64 rng(99);
    const auto c = build_contestant_matrix();
    const auto vertices = enumerate_minimax(c, Player::kHost).vertices;
    for (int i = 0; i < 20; ++i) {
      const auto w = oracle::random_simplex(rng, vertices.size(), false);
      RationalVector mix(6, 0);
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        for (std::size_t k = 0; k < 6; ++k) mix[k] += w[v] * vertices[v].prob(k);
      }
      CHECK(is_minimax(c, MixedStrategy(host_labels(), mix), Player::kHost).is_minimax);
    }
  }

  TEST_CASE("door relabelling maps the minimax sets onto themselves") {
    const auto c = build_contestant_matrix();
    const auto p = contestant_minimax();
    const auto hosts = enumerate_minimax(c, Player::kHost).vertices;
    for (const auto& sigma : DoorPermutation::all()) {
      CHECK(permute(c, sigma) == c);
      RationalVector image(12);
      for (std::size_t r = 0; r < 12; ++r) {
        image[index_of(sigma.apply(contestant_strategies()[r]))] = p.prob(r);
      }
      CHECK(MixedStrategy(contestant_labels(), image) == p);
      for (const auto& q : hosts) {
        RationalVector qi(6);
        for (std::size_t k = 0; k < 6; ++k) qi[index_of(sigma.apply(host_strategies()[k]))] = q.prob(k);
        CHECK(std::count(hosts.begin(), hosts.end(), MixedStrategy(host_labels(), qi)) == 1);
      }
    }
  }

  TEST_CASE("indifference technique") {
    const auto s = solve_by_indifference(reduced());
    CHECK(s.value == kTwoThirds);
    CHECK(s.contestant_optimal.probs() == uniform3());
    CHECK(s.host_optimal.probs() == uniform3());
    const auto id = solve_by_indifference(square({{1, 0}, {0, 1}}));
    CHECK(id.value == Rational(1, 2));
    CHECK(id.contestant_optimal.probs() == RationalVector{Rational(1, 2), Rational(1, 2)});
    // Saddle point at (r0, c1): full-support hypothesis fails.
    const auto saddle = square({{2, 1}, {0, 0}});
    CHECK(solve(saddle).value == 1);
    try {
      solve_by_indifference(saddle);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInfeasible);
    }
    try {
      solve_by_indifference(square({{1, 1}, {1, 1}}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kSingular);
    }
  }

  TEST_CASE("inverse formula") {
    const auto s = solve_by_inverse(reduced());
    CHECK(s.value == kTwoThirds);
    CHECK(s.value == solve(reduced()).value);
    CHECK(s.contestant_optimal.probs() == uniform3());
    CHECK(solve_by_inverse(square({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})).value == Rational(-1, 3));
    const auto two = solve_by_inverse(square({{2, 0}, {0, 2}}));
    CHECK(two.value == 1);
    CHECK(two.host_optimal.probs() == RationalVector{Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(solve_by_inverse(square({{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("diagonal formula") {
    CHECK(solve_diagonal({-1, -1, -1}) == Rational(-1, 3));
    CHECK(solve_diagonal({-1, -1, -1}) + 1 == kTwoThirds);
    CHECK(solve_diagonal({7}) == 7);
    const Rational v = solve_diagonal({-1, -2, -3});
    CHECK(v == Rational(-6, 11));
    // Independent certificate: both players weight door i by 1/d_i.
    const std::vector<std::vector<oracle::Q>> m{{-1, 0, 0}, {0, -2, 0}, {0, 0, -3}};
    const std::vector<oracle::Q> x{oracle::Q(6, 11), oracle::Q(3, 11), oracle::Q(2, 11)};
    CHECK(oracle::certifies(m, x, x, oracle::Q(-6, 11)));
    CHECK(solve(square({{-1, 0, 0}, {0, -2, 0}, {0, 0, -3}})).value == Rational(-6, 11));
    CHECK_THROWS_AS(solve_diagonal({1, 0, 2}), Error);
    CHECK_THROWS_AS(solve_diagonal({1, -1}), Error);
    CHECK_THROWS_AS(solve_diagonal({}), Error);
  }

  TEST_CASE("full support exclusion") {
    const auto c = build_contestant_matrix();
    const auto half = verify_full_support_exclusion(
        c, host_lambda_strategy({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(half.fully_supported);
    CHECK(half.best_response_value == kTwoThirds);
    CHECK(half.exclusion_holds);
    CHECK(half.dominated.size() == 9);
    for (const auto& d : half.dominated) CHECK(d.strictly_below);

    const auto corner = verify_full_support_exclusion(c, host_lambda_strategy({1, 1, 1}));
    CHECK_FALSE(corner.fully_supported);
    const auto it = std::find_if(corner.dominated.begin(), corner.dominated.end(),
                                 [](const DominatedStrategyCheck& d) { return d.label == "1NS"; });
    REQUIRE(it != corner.dominated.end());
    CHECK(it->payoff == kTwoThirds);
    CHECK_FALSE(it->strictly_below);

    CHECK_FALSE(verify_full_support_exclusion(c, MixedStrategy::pure(host_labels(), "1L")).fully_supported);
  }
}

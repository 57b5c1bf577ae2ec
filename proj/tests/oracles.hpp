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

#ifndef MONTYHALL_TESTS_ORACLES_HPP_
#define MONTYHALL_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline const std::array<std::string, 12> kRows{"1SS", "1SN", "1NS", "1NN", "2SS", "2SN",
                                               "2NS", "2NN", "3SS", "3SN", "3NS", "3NN"};
inline const std::array<std::string, 6> kCols{"1L", "1R", "2L", "2R", "3L", "3R"};

// Contestant win indicators, one row per strategy in kRows order.
inline const int kGoldenTable[12][6] = {
    {0, 0, 1, 1, 1, 1}, {0, 1, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0},
    {1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1}, {1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
    {1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 1}, {1, 1, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 1},
};

// Printed (contestant, host) rows of the maverick and superstitious games.
struct PrintedRow {
  const char* label;
  int cells[6][2];
};

inline const PrintedRow kMaverickRows[5] = {
    {"1SS", {{0, 0}, {0, 0}, {1, -1}, {1, -1}, {1, -1}, {1, -1}}},
    {"1SN", {{0, 0}, {1, -1}, {0, 0}, {0, 0}, {1, -1}, {1, -1}}},
    {"1NS", {{1, 4}, {0, 4}, {1, 3}, {1, 3}, {0, 2}, {0, 2}}},
    {"1NN", {{1, 5}, {1, 4}, {0, 3}, {0, 3}, {0, 2}, {0, 2}}},
    {"2SS", {{1, -1}, {1, -1}, {0, 0}, {0, 0}, {1, -1}, {1, -1}}},
};

inline const PrintedRow kSuperstitiousRows[5] = {
    {"1SS", {{0, 0}, {0, -1}, {1, -1}, {1, -1}, {1, -1}, {1, -1}}},
    {"1SN", {{0, 0}, {1, -2}, {0, 0}, {0, 0}, {1, -1}, {1, -1}}},
    {"1NS", {{1, -1}, {0, -1}, {1, -1}, {1, -1}, {0, 0}, {0, 0}}},
    {"1NN", {{1, -1}, {1, -2}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
    {"2SS", {{1, -1}, {1, -1}, {0, 0}, {0, -1}, {1, -1}, {1, -1}}},
};

struct Show {
  int revealed;
  bool left;
  int final_door;
  bool win;
};

// Plays one show straight from the rules using door arithmetic on 1+2+3 = 6.
inline Show play(const std::string& host, const std::string& contestant) {
  const int car = host[0] - '0';
  const int pick = contestant[0] - '0';
  const int low = pick == 1 ? 2 : 1;
  const int high = pick == 3 ? 2 : 3;
  int revealed;
  if (car == pick) {
    revealed = host[1] == 'L' ? low : high;
  } else {
    revealed = 6 - car - pick;
  }
  const bool left = revealed == low;
  const char act = contestant[left ? 1 : 2];
  const int final_door = act == 'S' ? 6 - pick - revealed : pick;
  return {revealed, left, final_door, final_door == car};
}

inline std::vector<Q> payoffs_against(const std::vector<Q>& host) {
  std::vector<Q> out(12, 0);
  for (std::size_t r = 0; r < 12; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      if (play(kCols[c], kRows[r]).win) out[r] += host[c];
    }
  }
  return out;
}

// Exhaustive argmax over the 12 pure Contestant strategies.
struct Argmax {
  Q value;
  std::vector<std::string> best;
};

inline Argmax brute_force_best(const std::vector<Q>& host) {
  const auto p = payoffs_against(host);
  Argmax a{p[0], {}};
  for (const auto& x : p) {
    if (x > a.value) a.value = x;
  }
  for (std::size_t r = 0; r < 12; ++r) {
    if (p[r] == a.value) a.best.push_back(kRows[r]);
  }
  return a;
}

inline std::array<Q, 3> marginal(const std::vector<Q>& host) {
  return {host[0] + host[1], host[2] + host[3], host[4] + host[5]};
}

inline std::vector<Q> lambda_vector(const std::array<Q, 3>& pi, const std::array<Q, 3>& lambda) {
  std::vector<Q> out;
  for (int x = 0; x < 3; ++x) {
    out.push_back(pi[x] * lambda[x]);
    out.push_back(pi[x] * (1 - lambda[x]));
  }
  return out;
}

// Random probability vector with denominators up to 60; positive entries when full is set.
inline std::vector<Q> random_simplex(std::mt19937_64& rng, std::size_t n, bool full) {
  std::uniform_int_distribution<int> d(full ? 1 : 0, 12);
  std::vector<Q> out(n);
  Q total = 0;
  do {
    total = 0;
    for (auto& x : out) {
      x = d(rng);
      total += x;
    }
  } while (total == 0);
  for (auto& x : out) {
    x /= total;
    x.canonicalize();
  }
  return out;
}

inline Q random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 24);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(0, q);
  Q out(num(rng), q);
  out.canonicalize();
  return out;
}

// A primal-dual pair certifies the value when both guarantees meet.
inline bool certifies(const std::vector<std::vector<Q>>& m, const std::vector<Q>& x,
                      const std::vector<Q>& y, const Q& value) {
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    Q s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += x[i] * m[i][j];
    if (s < value) return false;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    Q s = 0;
    for (std::size_t j = 0; j < m[0].size(); ++j) s += m[i][j] * y[j];
    if (s > value) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // MONTYHALL_TESTS_ORACLES_HPP_

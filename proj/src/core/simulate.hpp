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

#ifndef MONTYHALL_CORE_SIMULATE_HPP_
#define MONTYHALL_CORE_SIMULATE_HPP_

#include <cstdint>
#include <random>

#include "core/strategy.hpp"

namespace montyhall {

struct SimConfig {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  MixedStrategy contestant;  // over the 12 Contestant labels
  MixedStrategy host;        // over the 6 Host labels
};

struct SimResult {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  Rational empirical_rate;
  Rational exact_rate;  // P C Q^T
  double sigma = 0;     // sqrt(p (1 - p) / trials) at the exact rate
  double z_score = 0;
};

// Trials are split into fixed shards of kShardTrials. Shard k draws Contestant
// and Host strategies from two std::mt19937_64 engines seeded with
// std::seed_seq{seed_lo, seed_hi, stream, k} (stream 0 = Contestant,
// 1 = Host), so results depend only on (seed, trials, strategies) and not on
// the number of worker threads.
inline constexpr std::uint64_t kShardTrials = 1 << 16;

std::mt19937_64 make_stream(std::uint64_t seed, std::uint32_t stream, std::uint32_t shard);

// Inverse-CDF sampler with exact thresholds: index i is chosen for a 64-bit
// draw u iff cum_{i-1} <= u / 2^64 < cum_i.
class ExactSampler {
 public:
  explicit ExactSampler(const RationalVector& probs);
  std::size_t operator()(std::uint64_t draw) const;

 private:
  std::vector<unsigned __int128> thresholds_;  // ceil(cum_i * 2^64)
};

// Throws Error(kInvalidArgument) for zero trials or strategies on the wrong labels.
SimResult run(const SimConfig& config, unsigned workers = 0);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_SIMULATE_HPP_

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

#include "core/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "core/error.hpp"
#include "core/matrix.hpp"

namespace montyhall {

std::mt19937_64 make_stream(std::uint64_t seed, std::uint32_t stream, std::uint32_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream, shard};
  return std::mt19937_64(seq);
}

ExactSampler::ExactSampler(const RationalVector& probs) {
  const mpz_class two64 = mpz_class(1) << 64;
  Rational cum = 0;
  for (const auto& p : probs) {
    cum += p;
    // ceil(num * 2^64 / den)
    mpz_class t = cum.get_num() * two64;
    mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), cum.get_den_mpz_t());
    const std::uint64_t hi = mpz_class(t >> 64).get_ui();
    const std::uint64_t lo = mpz_class(t & mpz_class(std::numeric_limits<unsigned long>::max())).get_ui();
    thresholds_.push_back((static_cast<unsigned __int128>(hi) << 64) | lo);
  }
}

std::size_t ExactSampler::operator()(std::uint64_t draw) const {
  const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(),
                                   static_cast<unsigned __int128>(draw));
  return static_cast<std::size_t>(it - thresholds_.begin());
}

SimResult run(const SimConfig& config, unsigned workers) {
  if (config.trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (config.contestant.labels() != contestant_labels() || config.host.labels() != host_labels()) {
    throw Error(ErrorCode::kInvalidArgument, "simulation needs strategies over the 12x6 labels");
  }
  const ExactSampler pick_row(config.contestant.probs());
  const ExactSampler pick_col(config.host.probs());
  const auto& rows = contestant_strategies();
  const auto& cols = host_strategies();

  const std::uint64_t shards = (config.trials + kShardTrials - 1) / kShardTrials;
  std::vector<std::uint64_t> wins(shards, 0);
  auto run_shard = [&](std::uint64_t k) {
    auto c_rng = make_stream(config.seed, 0, static_cast<std::uint32_t>(k));
    auto h_rng = make_stream(config.seed, 1, static_cast<std::uint32_t>(k));
    const std::uint64_t n = std::min(kShardTrials, config.trials - k * kShardTrials);
    std::uint64_t w = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
      const auto& c = rows[pick_row(c_rng())];
      const auto& h = cols[pick_col(h_rng())];
      w += play(h, c).contestant_wins ? 1 : 0;
    }
    wins[k] = w;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shards));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t k = w; k < shards; k += workers) run_shard(k);
    });
  }
  for (auto& t : pool) t.join();

  SimResult r;
  r.trials = config.trials;
  for (auto w : wins) r.wins += w;
  r.empirical_rate = Rational(mpz_class(std::to_string(r.wins)), mpz_class(std::to_string(r.trials)));
  r.empirical_rate.canonicalize();
  r.exact_rate = expected_payoff(config.contestant.probs(), build_contestant_matrix(), config.host.probs());
  const double p = to_double(r.exact_rate);
  r.sigma = std::sqrt(p * (1 - p) / static_cast<double>(r.trials));
  const double diff = to_double(r.empirical_rate) - p;
  if (r.sigma > 0) {
    r.z_score = diff / r.sigma;
  } else {
    r.z_score = diff == 0 ? 0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  return r;
}

}  // namespace montyhall

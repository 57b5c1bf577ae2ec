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

#ifndef MONTYHALL_CORE_SERVICE_HPP_
#define MONTYHALL_CORE_SERVICE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "core/game.hpp"
#include "core/json_io.hpp"
#include "core/strategy.hpp"

namespace montyhall {

enum class SessionState { kAwaitingPick, kAwaitingFinal, kFinished };
std::string to_string(SessionState s);

struct HostConfig {
  std::string name;
  MixedStrategy host;
  bool hidden = false;  // advice falls back to the minimax guarantee
};

HostConfig parse_host_config(const Json& body);

struct Round {
  Playout playout;
  Action action;
  HostPureStrategy hidden;
  Rational exact_win;  // win probability of the chosen action given the pick
};

class Session {
 public:
  Session(std::string id, HostConfig config, std::uint64_t seed);

  Json describe(bool with_history = true) const;
  Json pick(int door);
  Json finish(Action action);
  Json next_round();
  Json advice() const;
  Json stats() const;

  const std::vector<Round>& history() const { return history_; }
  const HostConfig& config() const { return config_; }
  std::mutex& mutex() { return mutex_; }

 private:
  void sample();
  void require(SessionState s) const;

  std::string id_;
  HostConfig config_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  SessionState state_ = SessionState::kAwaitingPick;
  HostPureStrategy hidden_{Door(1), Side::kLeft};
  std::optional<Door> pick_;
  std::optional<Door> revealed_;
  std::vector<Round> history_;
  mutable std::mutex mutex_;
};

Json stats_json(const std::vector<const Round*>& rounds, bool include_exact);

struct AdviceResult {
  Rational switch_prob;
  Rational stay_prob;
};

AdviceResult conditional_advice(const MixedStrategy& host, Door pick, Door revealed);

class SessionStore {
 public:
  explicit SessionStore(std::optional<std::uint64_t> seed = std::nullopt);

  Json create(const Json& body);
  std::shared_ptr<Session> find(const std::string& id) const;
  Json aggregate_stats() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 tokens_;
};

class Service {
 public:
  explicit Service(std::optional<std::uint64_t> seed = std::nullopt);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  int bind(const std::string& host, int port);
  void run();
  void wait_until_ready() const;
  void stop();

  SessionStore& store();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace montyhall

#endif  // MONTYHALL_CORE_SERVICE_HPP_

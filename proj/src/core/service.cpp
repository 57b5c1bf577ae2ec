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

#include "core/service.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdio>

#include "core/commands.hpp"
#include "core/error.hpp"
#include "core/simulate.hpp"

namespace montyhall {

std::string to_string(SessionState s) {
  switch (s) {
    case SessionState::kAwaitingPick: return "awaiting_pick";
    case SessionState::kAwaitingFinal: return "awaiting_final";
    case SessionState::kFinished: return "finished";
  }
  return "unknown";
}

namespace {

std::string text_field(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_array()) {
    std::string out;
    for (const auto& x : j) out += (out.empty() ? "" : ",") + text_field(x);
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "expected a string, integer or list");
}

std::string action_name(Action a) { return a == Action::kSwitch ? "Switch" : "Notswitch"; }

Action parse_action(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::kInvalidArgument, "action must be a string");
  const auto s = j.get<std::string>();
  if (s == "Switch" || s == "switch" || s == "S") return Action::kSwitch;
  if (s == "Notswitch" || s == "notswitch" || s == "stay" || s == "Stay" || s == "N") {
    return Action::kNotswitch;
  }
  throw Error(ErrorCode::kInvalidArgument, "action must be Switch or Notswitch");
}

int parse_door(const Json& j) {
  int d = 0;
  if (j.is_number_integer()) {
    d = j.get<int>();
  } else if (j.is_string() && j.get<std::string>().size() == 1) {
    d = j.get<std::string>()[0] - '0';
  }
  if (d < 1 || d > 3) throw Error(ErrorCode::kInvalidArgument, "door must be 1, 2 or 3");
  return d;
}

Json config_json(const HostConfig& c) {
  Json j{{"name", c.name}, {"hidden_config", c.hidden}};
  if (!c.hidden) {
    j["host"] = to_json(c.host);
    const auto pi = car_marginal(c.host);
    j["pi"] = to_json(RationalVector(pi.begin(), pi.end()));
  }
  return j;
}

}  // namespace

HostConfig parse_host_config(const Json& body) {
  if (!body.is_object()) throw Error(ErrorCode::kInvalidArgument, "session body must be an object");
  HostConfig c;
  c.hidden = body.value("hidden", false);
  if (body.contains("pi") || body.contains("lambda")) {
    if (!body.contains("pi") || !body.contains("lambda")) {
      throw Error(ErrorCode::kInvalidArgument, "pi and lambda must be given together");
    }
    c.name = "pi=" + text_field(body["pi"]) + ";lambda=" + text_field(body["lambda"]);
  } else if (body.contains("config")) {
    c.name = text_field(body["config"]);
  } else {
    c.name = "Q*:1/2,1/2,1/2";
  }
  c.host = parse_strategy(c.name, Player::kHost);
  return c;
}

AdviceResult conditional_advice(const MixedStrategy& host, Door pick, Door revealed) {
  if (revealed == pick) throw Error(ErrorCode::kInvalidArgument, "revealed door equals the pick");
  Rational total = 0;
  Rational stay = 0;
  Rational sw = 0;
  const auto& hs = host_strategies();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (reveal_for(hs[i], pick) != revealed) continue;
    total += host.prob(i);
    if (hs[i].car_door == pick) stay += host.prob(i);
    if (hs[i].car_door == third_door(pick, revealed)) sw += host.prob(i);
  }
  if (total == 0) {
    throw Error(ErrorCode::kInvalidArgument, "observation has probability zero under the Host mixture");
  }
  return {sw / total, stay / total};
}

Session::Session(std::string id, HostConfig config, std::uint64_t seed)
    : id_(std::move(id)), config_(std::move(config)), seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  rng_.seed(seq);
  sample();
}

void Session::sample() {
  const ExactSampler sampler(config_.host.probs());
  hidden_ = host_strategies()[sampler(rng_())];
  pick_.reset();
  revealed_.reset();
}

void Session::require(SessionState s) const {
  if (state_ != s) {
    throw Error(ErrorCode::kWrongState,
                "session is " + to_string(state_) + ", expected " + to_string(s));
  }
}

Json Session::describe(bool with_history) const {
  Json j{{"id", id_},
         {"state", to_string(state_)},
         {"round", history_.size() + (state_ == SessionState::kFinished ? 0 : 1)},
         {"config", config_json(config_)}};
  if (pick_) j["pick"] = pick_->index();
  if (revealed_) {
    j["revealed"] = revealed_->index();
    j["revealed_side"] = std::string(1, to_char(side_of(*pick_, *revealed_)));
  }
  if (!with_history) return j;
  Json history = Json::array();
  for (const auto& r : history_) {
    Json h = to_json(r.playout);
    h["action"] = action_name(r.action);
    h["hidden"] = to_string(r.hidden);
    history.push_back(h);
  }
  j["history"] = history;
  return j;
}

Json Session::pick(int door) {
  require(SessionState::kAwaitingPick);
  pick_ = Door(door);
  revealed_ = reveal_for(hidden_, *pick_);
  state_ = SessionState::kAwaitingFinal;
  return Json{{"id", id_},
              {"state", to_string(state_)},
              {"round", history_.size() + 1},
              {"pick", pick_->index()},
              {"revealed", revealed_->index()},
              {"revealed_side", std::string(1, to_char(side_of(*pick_, *revealed_)))}};
}

Json Session::finish(Action action) {
  require(SessionState::kAwaitingFinal);
  const ContestantPureStrategy c{*pick_, action, action};
  const auto playout = play(hidden_, c);
  if (playout.revealed != *revealed_) throw Error(ErrorCode::kInternal, "reveal changed mid-round");
  const auto pi = car_marginal(config_.host);
  const Rational& stay = pi[static_cast<std::size_t>(pick_->index() - 1)];
  history_.push_back({playout, action, hidden_, action == Action::kSwitch ? 1 - stay : stay});
  state_ = SessionState::kFinished;
  Json j{{"id", id_},
         {"state", to_string(state_)},
         {"round", history_.size()},
         {"action", action_name(action)},
         {"playout", to_json(playout)},
         {"hidden", to_string(hidden_)}};
  return j;
}

Json Session::next_round() {
  require(SessionState::kFinished);
  sample();
  state_ = SessionState::kAwaitingPick;
  return describe(false);
}

Json Session::advice() const {
  require(SessionState::kAwaitingFinal);
  Json j{{"id", id_},
         {"pick", pick_->index()},
         {"revealed", revealed_->index()},
         {"revealed_side", std::string(1, to_char(side_of(*pick_, *revealed_)))}};
  if (config_.hidden) {
    j["mode"] = "hidden";
    j["minimax_guarantee"] = "2/3";
    j["recommended_action"] = Json::array({"Switch"});
    return j;
  }
  const auto a = conditional_advice(config_.host, *pick_, *revealed_);
  j["mode"] = "declared";
  j["exact_win_prob_if_switch"] = to_json(a.switch_prob);
  j["exact_win_prob_if_stay"] = to_json(a.stay_prob);
  Json rec = Json::array();
  if (a.switch_prob >= a.stay_prob) rec.push_back("Switch");
  if (a.stay_prob >= a.switch_prob) rec.push_back("Notswitch");
  j["recommended_action"] = rec;
  return j;
}

Json stats_json(const std::vector<const Round*>& rounds, bool include_exact) {
  struct Tally {
    std::uint64_t rounds = 0;
    std::uint64_t wins = 0;
  };
  Tally sw;
  Tally stay;
  Rational exact = 0;
  double variance = 0;
  for (const auto* r : rounds) {
    auto& t = r->action == Action::kSwitch ? sw : stay;
    ++t.rounds;
    t.wins += r->playout.contestant_wins ? 1 : 0;
    exact += r->exact_win;
    const double p = to_double(r->exact_win);
    variance += p * (1 - p);
  }
  auto rate = [](std::uint64_t wins, std::uint64_t n) -> Json {
    if (n == 0) return nullptr;
    return to_json(Rational(static_cast<long>(wins), static_cast<long>(n)));
  };
  const std::uint64_t n = sw.rounds + stay.rounds;
  const std::uint64_t wins = sw.wins + stay.wins;
  Json j{{"rounds", n},
         {"wins", wins},
         {"empirical_rate", rate(wins, n)},
         {"by_action",
          Json{{"Switch", Json{{"rounds", sw.rounds}, {"wins", sw.wins}, {"rate", rate(sw.wins, sw.rounds)}}},
               {"Notswitch",
                Json{{"rounds", stay.rounds}, {"wins", stay.wins}, {"rate", rate(stay.wins, stay.rounds)}}}}},
         {"minimax_reference", "2/3"}};
  if (include_exact && n > 0) {
    const Rational mean = exact / static_cast<long>(n);
    const double sigma = std::sqrt(variance) / static_cast<double>(n);
    j["exact_reference"] = to_json(mean);
    j["sigma"] = sigma;
    j["z_score"] = sigma > 0 ? (static_cast<double>(wins) / static_cast<double>(n) - to_double(mean)) / sigma : 0.0;
  } else {
    j["exact_reference"] = nullptr;
    j["sigma"] = nullptr;
    j["z_score"] = nullptr;
  }
  return j;
}

Json Session::stats() const {
  std::vector<const Round*> rounds;
  for (const auto& r : history_) rounds.push_back(&r);
  Json j{{"id", id_}};
  j.update(stats_json(rounds, !config_.hidden));
  return j;
}

SessionStore::SessionStore(std::optional<std::uint64_t> seed)
    : tokens_(seed ? *seed : std::random_device{}() ^ (std::uint64_t{std::random_device{}()} << 32)) {}

Json SessionStore::create(const Json& body) {
  auto config = parse_host_config(body);
  std::unique_lock lock(mutex_);
  std::string id;
  do {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(tokens_()),
                  static_cast<unsigned long long>(tokens_()));
    id = buf;
  } while (sessions_.count(id));
  std::uint64_t seed = tokens_();
  if (body.contains("seed")) {
    if (!body["seed"].is_number_unsigned()) {
      throw Error(ErrorCode::kInvalidArgument, "seed must be a non-negative integer");
    }
    seed = body["seed"].get<std::uint64_t>();
  }
  auto session = std::make_shared<Session>(id, std::move(config), seed);
  sessions_.emplace(id, session);
  return session->describe();
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kNotFound, "no session '" + id + "'");
  return it->second;
}

Json SessionStore::aggregate_stats() const {
  std::vector<std::shared_ptr<Session>> all;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [id, s] : sessions_) all.push_back(s);
  }
  std::vector<Round> copies;
  for (const auto& s : all) {
    std::lock_guard guard(s->mutex());
    copies.insert(copies.end(), s->history().begin(), s->history().end());
  }
  std::vector<const Round*> rounds;
  for (const auto& r : copies) rounds.push_back(&r);
  Json j{{"sessions", all.size()}};
  j.update(stats_json(rounds, true));
  return j;
}

namespace {

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWrongState: return 409;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kInternal: return 500;
    default: return 422;
  }
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const nlohmann::json::exception&) {
    const auto& b = req.body;
    if (b.find_first_of("{}[]\"\n ") == std::string::npos) return Json(b);
    throw Error(ErrorCode::kInvalidArgument, "request body is not valid JSON");
  }
}

std::string source_of(const Json& body) {
  if (body.is_string()) return body.get<std::string>();
  if (body.is_object() && body.contains("source")) return text_field(body["source"]);
  return "C";
}

MixedStrategy host_of(const Json& body) {
  if (body.is_string()) return parse_strategy(body.get<std::string>(), Player::kHost);
  if (body.is_object() && body.contains("host")) return parse_strategy(text_field(body["host"]), Player::kHost);
  return parse_host_config(body).host;
}

}  // namespace

struct Service::Impl {
  explicit Impl(std::optional<std::uint64_t> seed) : store(seed) { routes(); }

  SessionStore store;
  httplib::Server server;

  template <typename Fn>
  httplib::Server::Handler wrap(int ok_status, Fn fn) {
    return [fn, ok_status](const httplib::Request& req, httplib::Response& res) {
      Json out;
      try {
        out = fn(req);
        res.status = ok_status;
      } catch (const Error& e) {
        res.status = http_status(e.code());
        out = Json{{"error", e.what()}, {"status", res.status}};
      } catch (const std::exception& e) {
        res.status = 500;
        out = Json{{"error", e.what()}, {"status", 500}};
      }
      res.set_content(out.dump(), "application/json");
    };
  }

  std::shared_ptr<Session> session(const httplib::Request& req) {
    return store.find(req.matches[1].str());
  }

  void routes() {
    server.set_tcp_nodelay(true);
    server.set_keep_alive_max_count(1000);
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Get("/health", wrap(200, [](const httplib::Request&) { return Json{{"status", "ok"}}; }));
    server.Post("/sessions", wrap(201, [this](const httplib::Request& req) {
      return store.create(parse_body(req));
    }));
    server.Get("/stats", wrap(200, [this](const httplib::Request&) { return store.aggregate_stats(); }));
    server.Get(R"(/sessions/([0-9a-f]+))", wrap(200, [this](const httplib::Request& req) {
      auto s = session(req);
      std::lock_guard guard(s->mutex());
      return s->describe();
    }));
    server.Post(R"(/sessions/([0-9a-f]+)/pick)", wrap(200, [this](const httplib::Request& req) {
      const auto body = parse_body(req);
      if (!body.is_object() || !body.contains("door")) {
        throw Error(ErrorCode::kInvalidArgument, "body must contain door");
      }
      const int door = parse_door(body["door"]);
      auto s = session(req);
      std::lock_guard guard(s->mutex());
      return s->pick(door);
    }));
    server.Post(R"(/sessions/([0-9a-f]+)/final)", wrap(200, [this](const httplib::Request& req) {
      const auto body = parse_body(req);
      if (!body.is_object() || !body.contains("action")) {
        throw Error(ErrorCode::kInvalidArgument, "body must contain action");
      }
      const auto action = parse_action(body["action"]);
      auto s = session(req);
      std::lock_guard guard(s->mutex());
      return s->finish(action);
    }));
    server.Post(R"(/sessions/([0-9a-f]+)/next)", wrap(200, [this](const httplib::Request& req) {
      auto s = session(req);
      std::lock_guard guard(s->mutex());
      return s->next_round();
    }));
    server.Get(R"(/sessions/([0-9a-f]+)/advice)", wrap(200, [this](const httplib::Request& req) {
      auto s = session(req);
      std::lock_guard guard(s->mutex());
      return s->advice();
    }));
    server.Get(R"(/sessions/([0-9a-f]+)/stats)", wrap(200, [this](const httplib::Request& req) {
      auto s = session(req);
      std::lock_guard guard(s->mutex());
      return s->stats();
    }));
    server.Post("/solve", wrap(200, [](const httplib::Request& req) {
      const auto body = parse_body(req);
      const std::string method = body.is_object() ? body.value("method", "all") : "all";
      bool verified = false;
      if (body.is_object() && (body.contains("matrix") || body.contains("entries"))) {
        const auto m = matrix_from_json(body.contains("matrix") ? body["matrix"] : body);
        return solve_json(m, "request", method, &verified);
      }
      return solve_json(source_of(body), method, &verified);
    }));
    server.Post("/nash", wrap(200, [](const httplib::Request& req) {
      const auto body = parse_body(req);
      const std::string mode = body.is_object() ? body.value("mode", "all") : "all";
      bool verified = false;
      if (body.is_object() && body.contains("bimatrix")) {
        return nash_json(ResolvedGame{"request", bimatrix_from_json(body["bimatrix"]), std::nullopt},
                         mode, &verified);
      }
      if (body.is_object() && (body.contains("matrix") || body.contains("entries"))) {
        auto m = matrix_from_json(body.contains("matrix") ? body["matrix"] : body);
        auto neg = m.negated();
        return nash_json(ResolvedGame{"request", Bimatrix::make(std::move(m), std::move(neg)), std::nullopt},
                         mode, &verified);
      }
      if (body.is_object() && body.contains("contestant")) {
        return nash_json(ResolvedGame{"request", bimatrix_from_json(body), std::nullopt}, mode, &verified);
      }
      return nash_json(source_of(body), mode, &verified);
    }));
    server.Post("/best-response", wrap(200, [](const httplib::Request& req) {
      return best_response_json(host_of(parse_body(req)));
    }));
  }
};

Service::Service(std::optional<std::uint64_t> seed) : impl_(std::make_unique<Impl>(seed)) {}

Service::~Service() { stop(); }

int Service::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::kIo, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void Service::run() { impl_->server.listen_after_bind(); }

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

void Service::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

SessionStore& Service::store() { return impl_->store; }

}  // namespace montyhall

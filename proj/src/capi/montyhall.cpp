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

#include "montyhall/montyhall.h"

#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/error.hpp"
#include "core/service.hpp"

struct mh_engine {
  unsigned workers = 0;
};

struct mh_result {
  std::string text;
  bool verified = true;
};

struct mh_service {
  montyhall::Service service;
  explicit mh_service(std::optional<std::uint64_t> seed) : service(seed) {}
};

namespace {

thread_local std::string g_last_error;

mh_status fail(mh_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

mh_status to_status(montyhall::ErrorCode code) {
  using montyhall::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return MH_INVALID_ARGUMENT;
    case ErrorCode::kUnknownFixture: return MH_UNKNOWN_FIXTURE;
    case ErrorCode::kSingular: return MH_SINGULAR;
    case ErrorCode::kInfeasible: return MH_INFEASIBLE;
    case ErrorCode::kWrongState: return MH_WRONG_STATE;
    case ErrorCode::kNotFound: return MH_NOT_FOUND;
    case ErrorCode::kIo: return MH_IO;
    case ErrorCode::kInternal: return MH_INTERNAL;
  }
  return MH_INTERNAL;
}

template <typename Fn>
mh_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const montyhall::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MH_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MH_INTERNAL, e.what());
  }
}

montyhall::Format to_format(mh_format f) {
  switch (f) {
    case MH_FORMAT_JSON: return montyhall::Format::kJson;
    case MH_FORMAT_TABLE: return montyhall::Format::kTable;
    case MH_FORMAT_CSV: return montyhall::Format::kCsv;
  }
  throw montyhall::Error(montyhall::ErrorCode::kInvalidArgument, "unknown output format");
}

void need(const void* p, const char* what) {
  if (p == nullptr) {
    throw montyhall::Error(montyhall::ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

template <typename Fn>
mh_status command(mh_engine* engine, mh_result** out, Fn&& fn) {
  return guarded([&] {
    need(engine, "engine");
    need(out, "result pointer");
    *out = nullptr;
    montyhall::CommandOutput r = fn();
    *out = new mh_result{std::move(r.text), r.ok};
    return MH_OK;
  });
}

}  // namespace

extern "C" {

const char* mh_version(void) { return "1.0.0"; }

const char* mh_status_name(mh_status status) {
  switch (status) {
    case MH_OK: return "ok";
    case MH_INVALID_ARGUMENT: return "invalid argument";
    case MH_UNKNOWN_FIXTURE: return "unknown fixture";
    case MH_SINGULAR: return "singular system";
    case MH_INFEASIBLE: return "infeasible";
    case MH_WRONG_STATE: return "wrong state";
    case MH_NOT_FOUND: return "not found";
    case MH_IO: return "i/o error";
    case MH_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mh_last_error(void) { return g_last_error.c_str(); }

mh_status mh_parse_format(const char* name, mh_format* out) {
  return guarded([&] {
    need(name, "format");
    need(out, "format pointer");
    switch (montyhall::parse_format(name)) {
      case montyhall::Format::kJson: *out = MH_FORMAT_JSON; break;
      case montyhall::Format::kTable: *out = MH_FORMAT_TABLE; break;
      case montyhall::Format::kCsv: *out = MH_FORMAT_CSV; break;
    }
    return MH_OK;
  });
}

mh_status mh_engine_create(mh_engine** out) {
  return guarded([&] {
    need(out, "engine pointer");
    *out = new mh_engine;
    return MH_OK;
  });
}

void mh_engine_destroy(mh_engine* engine) { delete engine; }

mh_status mh_engine_set_workers(mh_engine* engine, unsigned workers) {
  return guarded([&] {
    need(engine, "engine");
    engine->workers = workers;
    return MH_OK;
  });
}

const char* mh_result_text(const mh_result* result) { return result ? result->text.c_str() : ""; }

size_t mh_result_size(const mh_result* result) { return result ? result->text.size() : 0; }

int mh_result_verified(const mh_result* result) { return result && result->verified ? 1 : 0; }

void mh_result_destroy(mh_result* result) { delete result; }

mh_status mh_build_matrix(mh_engine* engine, const char* fixture, mh_format format,
                          mh_result** out) {
  return command(engine, out, [&] {
    need(fixture, "fixture");
    return montyhall::cmd_build_matrix(fixture, to_format(format));
  });
}

mh_status mh_reduce(mh_engine* engine, const char* source, const char* kind, const char* policy,
                    mh_format format, mh_result** out) {
  return command(engine, out, [&] {
    need(source, "source");
    return montyhall::cmd_reduce(source, montyhall::parse_dominance_kind(kind ? kind : "weak"),
                                 montyhall::parse_elim_policy(policy ? policy : "rows_then_columns"),
                                 to_format(format));
  });
}

mh_status mh_solve(mh_engine* engine, const char* source, const char* method, mh_format format,
                   mh_result** out) {
  return command(engine, out, [&] {
    need(source, "source");
    return montyhall::cmd_solve(source, method ? method : "lp", to_format(format));
  });
}

mh_status mh_enumerate_minimax(mh_engine* engine, const char* source, const char* side,
                               mh_format format, mh_result** out) {
  return command(engine, out, [&] {
    need(source, "source");
    return montyhall::cmd_enumerate_minimax(
        source, montyhall::parse_player(side ? side : "contestant"), to_format(format));
  });
}

mh_status mh_nash(mh_engine* engine, const char* source, const char* mode, mh_format format,
                  mh_result** out) {
  return command(engine, out, [&] {
    need(source, "source");
    return montyhall::cmd_nash(source, mode ? mode : "all", to_format(format));
  });
}

mh_status mh_best_response(mh_engine* engine, const char* host, mh_format format,
                           mh_result** out) {
  return command(engine, out, [&] {
    need(host, "host strategy");
    return montyhall::cmd_best_response(host, to_format(format));
  });
}

mh_status mh_simulate(mh_engine* engine, const char* contestant, const char* host,
                      uint64_t trials, uint64_t seed, mh_format format, mh_result** out) {
  return command(engine, out, [&] {
    need(contestant, "contestant strategy");
    need(host, "host strategy");
    return montyhall::cmd_simulate(contestant, host, trials, seed, to_format(format),
                                   engine->workers);
  });
}

mh_status mh_paper_report(mh_engine* engine, mh_format format, mh_result** out) {
  return command(engine, out, [&] { return montyhall::cmd_paper_report(to_format(format)); });
}

mh_status mh_advice(mh_engine* engine, const char* host, int pick, int revealed,
                    mh_result** out) {
  return command(engine, out, [&] {
    need(host, "host strategy");
    const auto q = montyhall::parse_strategy(host, montyhall::Player::kHost);
    const montyhall::Door y(pick);
    const montyhall::Door z(revealed);
    const auto a = montyhall::conditional_advice(q, y, z);
    montyhall::Json j{{"pick", pick},
                      {"revealed", revealed},
                      {"revealed_side", std::string(1, montyhall::to_char(montyhall::side_of(y, z)))},
                      {"exact_win_prob_if_switch", montyhall::to_json(a.switch_prob)},
                      {"exact_win_prob_if_stay", montyhall::to_json(a.stay_prob)}};
    return montyhall::CommandOutput{j.dump(2) + "\n"};
  });
}

mh_status mh_service_create(const uint64_t* seed, mh_service** out) {
  return guarded([&] {
    need(out, "service pointer");
    *out = new mh_service(seed ? std::optional<std::uint64_t>(*seed) : std::nullopt);
    return MH_OK;
  });
}

mh_status mh_service_bind(mh_service* service, const char* host, int port, int* bound_port) {
  return guarded([&] {
    need(service, "service");
    const int p = service->service.bind(host ? host : "127.0.0.1", port);
    if (bound_port) *bound_port = p;
    return MH_OK;
  });
}

mh_status mh_service_run(mh_service* service) {
  return guarded([&] {
    need(service, "service");
    service->service.run();
    return MH_OK;
  });
}

mh_status mh_service_stop(mh_service* service) {
  return guarded([&] {
    need(service, "service");
    service->service.stop();
    return MH_OK;
  });
}

void mh_service_destroy(mh_service* service) { delete service; }

}  // extern "C"

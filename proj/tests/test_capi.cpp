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

#include <montyhall/montyhall.h>

#include <doctest.h>
#include <httplib.h>

#include <json.hpp>
#include <string>
#include <thread>

using Json = nlohmann::json;

namespace {

struct Engine {
  Engine() { REQUIRE(mh_engine_create(&ptr) == MH_OK); }
  ~Engine() { mh_engine_destroy(ptr); }
  mh_engine* ptr = nullptr;
};

struct Result {
  ~Result() { mh_result_destroy(ptr); }
  Json json() const { return Json::parse(std::string(mh_result_text(ptr), mh_result_size(ptr))); }
  mh_result* ptr = nullptr;
};

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("status names and formats") {
    CHECK(std::string(mh_version()) == "1.0.0");
    CHECK(std::string(mh_status_name(MH_OK)) == "ok");
    CHECK(std::string(mh_status_name(MH_WRONG_STATE)) == "wrong state");
    mh_format f = MH_FORMAT_TABLE;
    CHECK(mh_parse_format("csv", &f) == MH_OK);
    CHECK(f == MH_FORMAT_CSV);
    CHECK(mh_parse_format("yaml", &f) == MH_INVALID_ARGUMENT);
    CHECK(std::string(mh_last_error()).find("yaml") != std::string::npos);
    CHECK(mh_parse_format(nullptr, &f) == MH_INVALID_ARGUMENT);
    CHECK(mh_engine_create(nullptr) == MH_INVALID_ARGUMENT);
  }

  TEST_CASE("solve through the handle") {
    Engine e;
    Result r;
    REQUIRE(mh_solve(e.ptr, "C", "lp", MH_FORMAT_JSON, &r.ptr) == MH_OK);
    CHECK(mh_result_verified(r.ptr) == 1);
    const auto j = r.json();
    CHECK(j["value"] == "2/3");
    CHECK(j["solutions"][0]["contestant_optimal"]["support"] == Json::array({"1SS", "2SS", "3SS"}));
    CHECK(mh_result_size(r.ptr) == std::string(mh_result_text(r.ptr)).size());
  }

  TEST_CASE("errors leave the output untouched") {
    Engine e;
    mh_result* out = nullptr;
    CHECK(mh_build_matrix(e.ptr, "epsilon", MH_FORMAT_JSON, &out) == MH_UNKNOWN_FIXTURE);
    CHECK(out == nullptr);
    CHECK(std::string(mh_last_error()).find("epsilon") != std::string::npos);
    CHECK(mh_solve(e.ptr, "C", "newton", MH_FORMAT_JSON, &out) == MH_INVALID_ARGUMENT);
    CHECK(mh_nash(e.ptr, "gamma", "pure", MH_FORMAT_CSV, &out) == MH_INVALID_ARGUMENT);
    CHECK(mh_best_response(e.ptr, "Q*:2,0,0", MH_FORMAT_JSON, &out) == MH_INVALID_ARGUMENT);
    CHECK(mh_solve(nullptr, "C", "lp", MH_FORMAT_JSON, &out) == MH_INVALID_ARGUMENT);
    CHECK(mh_solve(e.ptr, nullptr, "lp", MH_FORMAT_JSON, &out) == MH_INVALID_ARGUMENT);
    CHECK(mh_solve(e.ptr, "C", "lp", MH_FORMAT_JSON, nullptr) == MH_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    mh_result_destroy(nullptr);
    mh_engine_destroy(nullptr);
  }

  TEST_CASE("every command answers") {
    Engine e;
    {
      Result r;
      REQUIRE(mh_build_matrix(e.ptr, "C", MH_FORMAT_CSV, &r.ptr) == MH_OK);
      CHECK(std::string(mh_result_text(r.ptr)).rfind(",1L,1R,2L,2R,3L,3R", 0) == 0);
    }
    {
      Result r;
      REQUIRE(mh_reduce(e.ptr, "C", "weak", "rows_then_columns", MH_FORMAT_JSON, &r.ptr) == MH_OK);
      CHECK(r.json()["surviving_rows"] == Json::array({"1SS", "2SS", "3SS"}));
    }
    {
      Result r;
      REQUIRE(mh_enumerate_minimax(e.ptr, "C", "host", MH_FORMAT_JSON, &r.ptr) == MH_OK);
      CHECK(r.json()["vertex_count"] == 8);
    }
    {
      Result r;
      REQUIRE(mh_nash(e.ptr, "zerosum", "pure", MH_FORMAT_JSON, &r.ptr) == MH_OK);
      CHECK(r.json()["pure"].empty());
    }
    {
      Result r;
      REQUIRE(mh_best_response(e.ptr, "pi=1/2,1/3,1/6;lambda=1/2,1/2,1/2", MH_FORMAT_JSON,
                               &r.ptr) == MH_OK);
      CHECK(r.json()["value"] == "5/6");
    }
    {
      Result r;
      REQUIRE(mh_engine_set_workers(e.ptr, 3) == MH_OK);
      REQUIRE(mh_simulate(e.ptr, "P*", "Q*:1/2,1/2,1/2", 20000, 7, MH_FORMAT_JSON, &r.ptr) ==
              MH_OK);
      const auto j = r.json();
      CHECK(j["trials"] == 20000);
      CHECK(j["exact_rate"] == "2/3");
      Result again;
      REQUIRE(mh_engine_set_workers(e.ptr, 1) == MH_OK);
      REQUIRE(mh_simulate(e.ptr, "P*", "Q*:1/2,1/2,1/2", 20000, 7, MH_FORMAT_JSON, &again.ptr) ==
              MH_OK);
      CHECK(again.json()["wins"] == j["wins"]);
    }
  }

  TEST_CASE("advice") {
    Engine e;
    Result r;
    REQUIRE(mh_advice(e.ptr, "Q*:1,1,1", 1, 3, &r.ptr) == MH_OK);
    const auto j = r.json();
    CHECK(j["revealed_side"] == "R");
    CHECK(j["exact_win_prob_if_switch"] == "1");
    CHECK(j["exact_win_prob_if_stay"] == "0");
    mh_result* out = nullptr;
    CHECK(mh_advice(e.ptr, "Q*:1,1,1", 1, 1, &out) == MH_INVALID_ARGUMENT);
    CHECK(mh_advice(e.ptr, "Q*:1,1,1", 4, 2, &out) == MH_INVALID_ARGUMENT);
  }

  TEST_CASE("service lifecycle") {
    const std::uint64_t seed = 5;
    mh_service* svc = nullptr;
    REQUIRE(mh_service_create(&seed, &svc) == MH_OK);
    int port = 0;
    REQUIRE(mh_service_bind(svc, "127.0.0.1", 0, &port) == MH_OK);
    CHECK(port > 0);
    std::thread runner([svc] { mh_service_run(svc); });
    httplib::Client client("127.0.0.1", port);
    httplib::Result res;
    for (int i = 0; i < 200 && !res; ++i) {
      res = client.Get("/health");
      if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    REQUIRE(res);
    CHECK(res->status == 200);
    res = client.Post("/sessions", R"({"config":"Q*:1,1,1"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 201);
    CHECK(mh_service_stop(svc) == MH_OK);
    runner.join();
    mh_service_destroy(svc);
  }
}

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

#ifndef MONTYHALL_TESTS_SERVICE_HARNESS_HPP_
#define MONTYHALL_TESTS_SERVICE_HARNESS_HPP_

#include <httplib.h>

#include <stdexcept>
#include <string>
#include <thread>

#include "core/json_io.hpp"
#include "core/service.hpp"

namespace harness {

using montyhall::Json;

class LiveService {
 public:
  explicit LiveService(std::uint64_t seed) : service_(seed) {
    port_ = service_.bind("127.0.0.1", 0);
    thread_ = std::thread([this] { service_.run(); });
    service_.wait_until_ready();
  }
  ~LiveService() {
    service_.stop();
    thread_.join();
  }
  int port() const { return port_; }

 private:
  montyhall::Service service_;
  int port_ = 0;
  std::thread thread_;
};

struct Reply {
  int status = 0;
  Json body;
};

// Thin JSON client standing in for the browser.
class Bot {
 public:
  explicit Bot(int port) : client_("127.0.0.1", port) { 
    client_.set_keep_alive(true);
    client_.set_tcp_nodelay(true);
  }

  Reply get(const std::string& path) { return wrap(client_.Get(path)); }
  Reply post(const std::string& path, const Json& body) {
    return wrap(client_.Post(path, body.dump(), "application/json"));
  }
  Reply post_raw(const std::string& path, const std::string& body) {
    return wrap(client_.Post(path, body, "application/json"));
  }

  std::string create(const Json& config) {
    const auto r = post("/sessions", config);
    if (r.status != 201) throw std::runtime_error("create failed: " + r.body.dump());
    return r.body["id"].get<std::string>();
  }

 private:
  static Reply wrap(const httplib::Result& res) {
    if (!res) throw std::runtime_error("request failed: " + httplib::to_string(res.error()));
    return {res->status, Json::parse(res->body)};
  }
  httplib::Client client_;
};

}  // namespace harness

#endif  // MONTYHALL_TESTS_SERVICE_HARNESS_HPP_

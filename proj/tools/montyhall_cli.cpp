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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Globals {
  std::string format = "table";
  std::string output;
  std::optional<std::uint64_t> seed;
};

int report_failure(mh_status status) {
  std::cerr << "montyhall: " << mh_status_name(status) << ": " << mh_last_error() << '\n';
  return 2;
}

// Runs one engine call and writes its text; exit 1 flags a failed certificate.
int emit(const Globals& g, const std::function<mh_status(mh_engine*, mh_format, mh_result**)>& call) {
  mh_format format;
  if (mh_status s = mh_parse_format(g.format.c_str(), &format); s != MH_OK) return report_failure(s);
  mh_engine* engine = nullptr;
  if (mh_status s = mh_engine_create(&engine); s != MH_OK) return report_failure(s);
  mh_result* result = nullptr;
  const mh_status s = call(engine, format, &result);
  mh_engine_destroy(engine);
  if (s != MH_OK) return report_failure(s);
  int code = 0;
  if (g.output.empty()) {
    std::cout << mh_result_text(result);
    std::cout.flush();
  } else {
    std::ofstream out(g.output, std::ios::binary);
    out.write(mh_result_text(result), static_cast<std::streamsize>(mh_result_size(result)));
    if (!out) {
      std::cerr << "montyhall: cannot write '" << g.output << "'\n";
      code = 2;
    }
  }
  if (code == 0 && !mh_result_verified(result)) {
    std::cerr << "montyhall: verification failed\n";
    code = 1;
  }
  mh_result_destroy(result);
  return code;
}

int serve(const Globals& g, const std::string& host, int port) {
  mh_service* service = nullptr;
  const std::uint64_t seed = g.seed.value_or(0);
  if (mh_status s = mh_service_create(g.seed ? &seed : nullptr, &service); s != MH_OK) {
    return report_failure(s);
  }
  int bound = 0;
  if (mh_status s = mh_service_bind(service, host.c_str(), port, &bound); s != MH_OK) {
    mh_service_destroy(service);
    return report_failure(s);
  }
  std::cerr << "montyhall: listening on http://" << host << ':' << bound << std::endl;
  const mh_status s = mh_service_run(service);
  mh_service_destroy(service);
  return s == MH_OK ? 0 : report_failure(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the Monty Hall game"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "Write output to a file instead of stdout");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for simulate and serve");

  std::function<int()> action;

  std::string fixture = "C";
  auto* build = app.add_subcommand("build-matrix", "Print a payoff matrix or bimatrix fixture");
  build->add_option("fixture", fixture, "C, c3, alpha, beta, beta:<Q>, gamma, delta, diag:<list> or a file")
      ->capture_default_str();
  build->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        return mh_build_matrix(e, fixture.c_str(), f, r);
      });
    };
  });

  std::string source = "C";
  std::string kind = "weak";
  std::string policy = "rows_then_columns";
  auto* reduce = app.add_subcommand("reduce", "Iterated elimination of dominated strategies");
  reduce->add_option("source", source, "Matrix fixture or file")->capture_default_str();
  reduce->add_option("--kind", kind)->check(CLI::IsMember({"weak", "strict"}))->capture_default_str();
  reduce->add_option("--policy", policy)
      ->check(CLI::IsMember({"rows_then_columns", "fixpoint"}))
      ->capture_default_str();
  reduce->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        return mh_reduce(e, source.c_str(), kind.c_str(), policy.c_str(), f, r);
      });
    };
  });

  std::string method = "lp";
  auto* solve = app.add_subcommand("solve", "Solve a zero-sum matrix game exactly");
  solve->add_option("source", source, "Matrix fixture or file")->capture_default_str();
  solve->add_option("--method", method)
      ->check(CLI::IsMember({"lp", "indifference", "inverse", "diagonal", "all"}))
      ->capture_default_str();
  solve->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        return mh_solve(e, source.c_str(), method.c_str(), f, r);
      });
    };
  });

  std::string side = "contestant";
  auto* minimax = app.add_subcommand("enumerate-minimax", "List every extreme minimax strategy");
  minimax->add_option("source", source, "Matrix fixture or file")->capture_default_str();
  minimax->add_option("--side", side)->check(CLI::IsMember({"contestant", "host"}))->capture_default_str();
  minimax->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        return mh_enumerate_minimax(e, source.c_str(), side.c_str(), f, r);
      });
    };
  });

  std::string game = "gamma";
  std::string mode = "all";
  auto* nash = app.add_subcommand("nash", "Pure and mixed Nash equilibria of a bimatrix game");
  nash->add_option("game", game, "zerosum, alpha, beta, beta:<Q>, gamma, delta or a file")
      ->capture_default_str();
  nash->add_option("--mode", mode)->check(CLI::IsMember({"pure", "mixed", "all"}))->capture_default_str();
  nash->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        return mh_nash(e, game.c_str(), mode.c_str(), f, r);
      });
    };
  });

  std::string pi;
  std::string lambda;
  std::string host;
  auto* br = app.add_subcommand("best-response", "Contestant best response to a Host mixture");
  auto* pi_opt = br->add_option("--pi", pi, "Car marginal, e.g. 1/2,1/3,1/6");
  auto* lambda_opt = br->add_option("--lambda", lambda, "Left-reveal probabilities on a match");
  auto* host_opt = br->add_option("--host", host, "Host strategy, e.g. Q*:1,1,1 or 1L:1/2,2R:1/2");
  pi_opt->needs(lambda_opt);
  lambda_opt->needs(pi_opt);
  host_opt->excludes(pi_opt);
  br->callback([&] {
    if (host.empty() && pi.empty()) throw CLI::RequiredError("--host or --pi/--lambda");
    if (host.empty()) host = "pi=" + pi + ";lambda=" + lambda;
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        return mh_best_response(e, host.c_str(), f, r);
      });
    };
  });

  std::string contestant = "P*";
  std::string sim_host = "Q*:1/2,1/2,1/2";
  std::uint64_t trials = 100000;
  unsigned workers = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo play of a strategy profile");
  sim->add_option("--contestant", contestant)->capture_default_str();
  sim->add_option("--host", sim_host)->capture_default_str();
  sim->add_option("--trials", trials)->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--workers", workers, "Worker threads, 0 for all cores")->capture_default_str();
  sim->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) {
        mh_engine_set_workers(e, workers);
        return mh_simulate(e, contestant.c_str(), sim_host.c_str(), trials, g.seed.value_or(1), f, r);
      });
    };
  });

  auto* report = app.add_subcommand("paper-report", "Reproduce every headline result");
  report->callback([&] {
    action = [&] {
      return emit(g, [&](mh_engine* e, mh_format f, mh_result** r) { return mh_paper_report(e, f, r); });
    };
  });

  std::string bind_host = "127.0.0.1";
  int port = 8080;
  auto* srv = app.add_subcommand("serve", "Run the HTTP play service");
  srv->add_option("--host", bind_host)->capture_default_str();
  srv->add_option("--port", port)->check(CLI::Range(0, 65535))->capture_default_str();
  srv->callback([&] { action = [&] { return serve(g, bind_host, port); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (*seed_opt) g.seed = seed;
  return action ? action() : 0;
}

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

#include "core/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/nash.hpp"
#include "core/render.hpp"
#include "core/simulate.hpp"
#include "core/zerosum.hpp"

namespace montyhall {

Format parse_format(std::string_view s) {
  if (s == "json") return Format::kJson;
  if (s == "table" || s == "text") return Format::kTable;
  if (s == "csv") return Format::kCsv;
  throw Error(ErrorCode::kInvalidArgument,
              "format must be json, table or csv, got '" + std::string(s) + "'");
}

namespace {

Json read_json_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + std::string(path) + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, "malformed JSON in '" + std::string(path) + "': " + e.what());
  }
}

bool is_file(std::string_view source) {
  std::error_code ec;
  return std::filesystem::is_regular_file(std::filesystem::path(std::string(source)), ec);
}

PayoffMatrix reduced_contestant_matrix() {
  return eliminate(build_contestant_matrix(), ElimPolicy::kRowsThenColumns, DominanceKind::kWeak)
      .reduced;
}

void require_not_csv(Format format) {
  if (format == Format::kCsv) {
    throw Error(ErrorCode::kInvalidArgument, "csv output is only available for matrices");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Host minimax vertices on the 12x6 grid carry their lambda triple.
std::optional<std::array<Rational, 3>> lambda_of(const MixedStrategy& host) {
  if (host.labels() != host_labels()) return std::nullopt;
  const auto pi = car_marginal(host);
  std::array<Rational, 3> lambda;
  for (std::size_t x = 0; x < 3; ++x) {
    if (pi[x] != Rational(1, 3)) return std::nullopt;
    lambda[x] = host.prob(2 * x) * 3;
  }
  return lambda;
}

std::string lambda_string(const std::array<Rational, 3>& l) {
  return to_string(l[0]) + "," + to_string(l[1]) + "," + to_string(l[2]);
}

}  // namespace

PayoffMatrix resolve_matrix(std::string_view source) {
  if (source == "C") return build_contestant_matrix();
  if (source == "c3") return reduced_contestant_matrix();
  if (source.rfind("diag:", 0) == 0) {
    const auto d = parse_rational_list(source.substr(5));
    std::vector<std::string> labels;
    std::vector<RationalVector> e(d.size(), RationalVector(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) {
      labels.push_back("d" + std::to_string(i + 1));
      e[i][i] = d[i];
    }
    return PayoffMatrix(labels, labels, std::move(e));
  }
  if (is_file(source)) {
    const auto j = read_json_file(source);
    return j.contains("entries") ? matrix_from_json(j) : bimatrix_from_json(j).contestant;
  }
  return resolve_bimatrix(source).game.contestant;
}

ResolvedGame resolve_bimatrix(std::string_view source) {
  if (source.rfind("beta:", 0) == 0) {
    return {std::string(source), build_host_matrix(HostKind::kIndifferent),
            parse_strategy(source.substr(5), Player::kHost)};
  }
  if (source == "C") return {"zerosum", build_host_matrix(HostKind::kZeroSum), std::nullopt};
  if (is_file(source)) {
    const auto j = read_json_file(source);
    if (j.contains("entries")) {
      auto m = matrix_from_json(j);
      auto neg = m.negated();
      return {std::string(source), Bimatrix::make(std::move(m), std::move(neg)), std::nullopt};
    }
    return {std::string(source), bimatrix_from_json(j), std::nullopt};
  }
  try {
    return {std::string(source), build_host_matrix(parse_host_kind(source)), std::nullopt};
  } catch (const Error&) {
    throw Error(ErrorCode::kUnknownFixture,
                "unknown fixture or file '" + std::string(source) +
                    "' (expected C, c3, zerosum, alpha, beta, beta:<Q>, gamma, delta, diag:<d,...>)");
  }
}

CommandOutput cmd_build_matrix(std::string_view fixture, Format format) {
  const bool single = fixture == "C" || fixture == "c3" || fixture.rfind("diag:", 0) == 0 ||
                      (is_file(fixture) && read_json_file(fixture).contains("entries"));
  if (single) {
    const auto m = resolve_matrix(fixture);
    switch (format) {
      case Format::kJson: return {dump(to_json(m))};
      case Format::kCsv: return {render_csv(m)};
      case Format::kTable: return {render_table(m, m.is_monty_hall_grid())};
    }
  }
  const auto g = resolve_bimatrix(fixture).game;
  switch (format) {
    case Format::kJson: return {dump(to_json(g))};
    case Format::kCsv: return {render_csv(g)};
    case Format::kTable: break;
  }
  return {render_table(g, g.contestant.is_monty_hall_grid())};
}

CommandOutput cmd_reduce(std::string_view source, DominanceKind kind, ElimPolicy policy,
                         Format format) {
  const auto m = resolve_matrix(source);
  const auto trace = eliminate(m, policy, kind);
  if (format == Format::kJson) {
    Json j{{"source", std::string(source)}, {"kind", to_string(kind)}, {"policy", to_string(policy)}};
    j.update(to_json(trace));
    return {dump(j)};
  }
  if (format == Format::kCsv) return {render_csv(trace.reduced)};
  std::ostringstream os;
  os << "Dominance elimination on " << source << " (" << to_string(kind) << ", "
     << to_string(policy) << ")\n";
  if (trace.steps.empty()) os << "  no strategy is dominated\n";
  for (const auto& s : trace.steps) {
    os << "  " << s.step << ". " << to_string(s.axis) << ' ' << s.eliminated << " removed: "
       << (s.kind == "duplicate" ? "identical to " : std::string(s.kind) + "ly dominated by ")
       << s.dominator << '\n';
  }
  os << "\nReduced matrix:\n" << render_table(trace.reduced);
  return {os.str()};
}

Json solve_json(std::string_view source, std::string_view method, bool* verified) {
  return solve_json(resolve_matrix(source), source, method, verified);
}

Json solve_json(const PayoffMatrix& m, std::string_view source, std::string_view method,
                bool* verified) {
  const auto lp = solve(m);
  *verified = lp.certificate_holds(m);
  Json solutions = Json::array();
  auto attempt = [&](std::string_view name, auto&& fn) {
    try {
      solutions.push_back(fn());
    } catch (const Error& e) {
      solutions.push_back(Json{{"method", std::string(name)}, {"error", e.what()}});
    }
  };
  const bool all = method == "all";
  if (method != "lp" && method != "indifference" && method != "inverse" && method != "diagonal" && !all) {
    throw Error(ErrorCode::kInvalidArgument, "method must be lp, indifference, inverse, diagonal or all");
  }
  if (all || method == "lp") solutions.push_back(to_json(lp));
  if (all || method == "indifference") {
    attempt("indifference", [&] { return to_json(solve_by_indifference(m)); });
  }
  if (all || method == "inverse") attempt("inverse", [&] { return to_json(solve_by_inverse(m)); });
  if (all || method == "diagonal") {
    attempt("diagonal", [&] {
      RationalVector d;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (i != j && sgn(m.at(i, j)) != 0) {
            throw Error(ErrorCode::kInvalidArgument, "matrix is not diagonal");
          }
        }
        if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "matrix is not square");
        d.push_back(m.at(i, i));
      }
      return Json{{"method", "diagonal"}, {"value", to_json(solve_diagonal(d))}};
    });
  }
  return Json{{"source", std::string(source)},
              {"value", to_json(lp.value)},
              {"verified", *verified},
              {"solutions", solutions}};
}

CommandOutput cmd_solve(std::string_view source, std::string_view method, Format format) {
  require_not_csv(format);
  bool verified = false;
  const auto j = solve_json(source, method, &verified);
  if (format == Format::kJson) return {dump(j), verified};
  std::ostringstream os;
  os << "Zero-sum game " << source << '\n';
  os << "value = " << j["value"].get<std::string>() << '\n';
  for (const auto& s : j["solutions"]) {
    os << "\n[" << s["method"].get<std::string>() << "]\n";
    if (s.contains("error")) {
      os << "  failed: " << s["error"].get<std::string>() << '\n';
      continue;
    }
    os << "  value = " << s["value"].get<std::string>() << '\n';
    if (!s.contains("contestant_optimal")) continue;
    auto line = [&](const char* name, const Json& strat) {
      os << "  " << name << " = (";
      bool first = true;
      for (const auto& p : strat["probs"]) {
        os << (first ? "" : ",") << p.get<std::string>();
        first = false;
      }
      os << ")\n";
    };
    line("P*", s["contestant_optimal"]);
    line("Q*", s["host_optimal"]);
    auto cert = [&](const char* name, const Json& v) {
      os << "  " << name << " (";
      bool first = true;
      for (const auto& p : v) {
        os << (first ? "" : ",") << p.get<std::string>();
        first = false;
      }
      os << ")\n";
    };
    cert("certificate P*M   =", s["certificate"]["contestant_guarantee"]);
    cert("certificate M Q*T =", s["certificate"]["host_guarantee"]);
  }
  os << "\ncertificate check: " << (verified ? "passed" : "FAILED") << '\n';
  return {os.str(), verified};
}

CommandOutput cmd_enumerate_minimax(std::string_view source, Player side, Format format) {
  require_not_csv(format);
  const auto m = resolve_matrix(source);
  const auto set = enumerate_minimax(m, side);
  bool ok = true;
  for (const auto& v : set.vertices) ok = ok && is_minimax(m, v, side).is_minimax;
  if (format == Format::kJson) {
    Json j{{"source", std::string(source)}};
    j.update(to_json(set));
    for (std::size_t i = 0; i < set.vertices.size(); ++i) {
      const auto l = side == Player::kHost ? lambda_of(set.vertices[i]) : std::nullopt;
      if (l) j["vertices"][i]["lambda"] = to_json(RationalVector(l->begin(), l->end()));
    }
    j["verified"] = ok;
    return {dump(j), ok};
  }
  std::ostringstream os;
  os << "Minimax strategies of " << to_string(side) << " in " << source << " (value "
     << to_string(set.value) << "): " << set.vertices.size() << " extreme point"
     << (set.vertices.size() == 1 ? "" : "s") << '\n';
  for (const auto& v : set.vertices) {
    os << "  " << render_vector(v.probs());
    if (side == Player::kHost) {
      if (const auto l = lambda_of(v)) os << "   lambda = (" << lambda_string(*l) << ")";
    }
    os << '\n';
  }
  return {os.str(), ok};
}

Json nash_json(std::string_view source, std::string_view mode, bool* verified) {
  return nash_json(resolve_bimatrix(source), mode, verified);
}

Json nash_json(const ResolvedGame& resolved, std::string_view mode, bool* verified) {
  if (mode != "pure" && mode != "mixed" && mode != "all") {
    throw Error(ErrorCode::kInvalidArgument, "mode must be pure, mixed or all");
  }
  const auto& g = resolved.game;
  *verified = true;
  Json j{{"source", resolved.name}};
  if (mode != "mixed") {
    Json pure = Json::array();
    for (const auto& e : pure_nash(g)) {
      *verified = *verified && is_nash_equilibrium(g, e.contestant, e.host);
      pure.push_back(to_json(e));
    }
    j["pure"] = pure;
  }
  if (mode != "pure") {
    const auto set = mixed_nash(g);
    for (const auto& e : set.equilibria) {
      *verified = *verified && is_nash_equilibrium(g, e.contestant, e.host);
    }
    j["mixed"] = to_json(set);
  }
  if (resolved.fixed_host) {
    const auto br = best_response(g.contestant, *resolved.fixed_host);
    const auto response = MixedStrategy::uniform_over(g.contestant.row_labels(), br.best_pure_set);
    const bool eq = is_nash_equilibrium(g, response, *resolved.fixed_host);
    *verified = *verified && eq;
    j["fixed_host"] = Json{{"host", to_json(*resolved.fixed_host)},
                           {"best_response", to_json(response)},
                           {"is_equilibrium", eq}};
  }
  j["verified"] = *verified;
  return j;
}

CommandOutput cmd_nash(std::string_view source, std::string_view mode, Format format) {
  require_not_csv(format);
  bool verified = false;
  const auto j = nash_json(source, mode, &verified);
  if (format == Format::kJson) return {dump(j), verified};
  std::ostringstream os;
  auto profile = [](const Json& e) {
    std::string out = "(";
    auto side = [&](const Json& s) {
      std::string t;
      const auto& labels = s["labels"];
      const auto& probs = s["probs"];
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (probs[i] == "0") continue;
        if (!t.empty()) t += " + ";
        t += (probs[i] == "1" ? "" : probs[i].get<std::string>() + " ") + labels[i].get<std::string>();
      }
      return t;
    };
    out += side(e["contestant"]) + " ; " + side(e["host"]) + ")  payoffs (" +
           e["payoffs"][0].get<std::string>() + ", " + e["payoffs"][1].get<std::string>() + ")";
    return out;
  };
  os << "Nash equilibria of " << j["source"].get<std::string>() << '\n';
  if (j.contains("pure")) {
    os << "\npure equilibria: " << j["pure"].size() << '\n';
    for (const auto& e : j["pure"]) os << "  " << profile(e) << '\n';
  }
  if (j.contains("mixed")) {
    const auto& mixed = j["mixed"];
    os << "\nextreme equilibria: " << mixed["equilibria"].size() << " in "
       << mixed["components"].size() << " component(s)\n";
    for (std::size_t c = 0; c < mixed["components"].size(); ++c) {
      const auto& comp = mixed["components"][c];
      os << " component " << c << (comp["continuum"].get<bool>() ? " (continuum)" : " (isolated)") << '\n';
      for (const auto& idx : comp["equilibria"]) {
        os << "  " << profile(mixed["equilibria"][idx.get<std::size_t>()]) << '\n';
      }
    }
  }
  if (j.contains("fixed_host")) {
    os << "\nbest response to the fixed Host strategy forms an equilibrium: "
       << (j["fixed_host"]["is_equilibrium"].get<bool>() ? "yes" : "NO") << '\n';
  }
  os << "\ndeviation check: " << (verified ? "passed" : "FAILED") << '\n';
  return {os.str(), verified};
}

Json best_response_json(const MixedStrategy& host) {
  const auto c = build_contestant_matrix();
  const auto report = best_response(c, host);
  Json j{{"host", to_json(host)}};
  j.update(to_json(report));
  if (host.fully_supported()) {
    j["classification"] = to_json(classify_equilibrium_response(car_marginal(host), true));
  } else {
    j["classification"] = nullptr;
  }
  j["full_support"] = to_json(verify_full_support_exclusion(c, host));
  return j;
}

CommandOutput cmd_best_response(std::string_view host_spec, Format format) {
  require_not_csv(format);
  const auto host = parse_strategy(host_spec, Player::kHost);
  const auto j = best_response_json(host);
  if (format == Format::kJson) return {dump(j)};
  std::ostringstream os;
  os << "Host strategy Q = " << render_vector(host.probs()) << '\n';
  os << "car marginal pi = (" << j["pi"][0].get<std::string>() << ", " << j["pi"][1].get<std::string>()
     << ", " << j["pi"][2].get<std::string>() << ")\n";
  os << "best-response value = " << j["value"].get<std::string>()
     << "   (1 - min pi = " << j["one_minus_min_pi"].get<std::string>() << ")\n";
  os << "best pure responses: {";
  for (std::size_t i = 0; i < j["best_pure_set"].size(); ++i) {
    os << (i ? ", " : "") << j["best_pure_set"][i].get<std::string>();
  }
  os << "}\n";
  if (!j["excluded"].empty()) {
    os << "excluded by rule:\n";
    for (const auto& e : j["excluded"]) {
      os << "  " << e["strategy"].get<std::string>() << "  rule " << e["rule"].get<std::string>()
         << "  payoff " << e["payoff"].get<std::string>() << '\n';
    }
  }
  if (!j["classification"].is_null()) {
    os << "fully supported Host: case (" << j["classification"]["theorem_case"].get<int>()
       << "), Contestant response supported on {";
    const auto& s = j["classification"]["support"];
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i].get<std::string>();
    os << "}\n";
  } else {
    os << "Host strategy is not fully supported\n";
  }
  return {os.str()};
}

CommandOutput cmd_simulate(std::string_view contestant_spec, std::string_view host_spec,
                           std::uint64_t trials, std::uint64_t seed, Format format,
                           unsigned workers) {
  require_not_csv(format);
  SimConfig config{trials, seed, parse_strategy(contestant_spec, Player::kContestant),
                   parse_strategy(host_spec, Player::kHost)};
  const auto r = run(config, workers);
  if (format == Format::kJson) {
    Json j{{"contestant", to_json(config.contestant)}, {"host", to_json(config.host)}, {"seed", seed}};
    j.update(to_json(r));
    j["within_3_sigma"] = std::abs(r.z_score) <= 3;
    return {dump(j)};
  }
  std::ostringstream os;
  os.precision(6);
  os << "trials " << r.trials << ", seed " << seed << '\n'
     << "wins " << r.wins << ", empirical rate " << to_double(r.empirical_rate) << '\n'
     << "exact rate " << to_string(r.exact_rate) << " (" << to_double(r.exact_rate) << ")\n"
     << "sigma " << r.sigma << ", z " << r.z_score << '\n';
  return {os.str()};
}

CommandOutput cmd_paper_report(Format format) {
  require_not_csv(format);
  bool ok = true;
  const auto c = build_contestant_matrix();
  const auto trace = eliminate(c, ElimPolicy::kRowsThenColumns, DominanceKind::kWeak);
  const auto sol = solve(c);
  ok = ok && sol.certificate_holds(c) && sol.value == Rational(2, 3);
  const auto cont = enumerate_minimax(c, Player::kContestant);
  const auto host = enumerate_minimax(c, Player::kHost);
  ok = ok && cont.vertices.size() == 1 && host.vertices.size() == 8;

  const auto gamma = build_host_matrix(HostKind::kMaverick);
  const auto gamma_pure = pure_nash(gamma);
  const auto delta = build_host_matrix(HostKind::kSuperstitious);
  const auto delta_set = mixed_nash(delta);
  const auto p_star = contestant_minimax();
  const auto q111 = host_lambda_strategy({1, 1, 1});
  const bool delta_named = is_nash_equilibrium(delta, p_star, q111);
  ok = ok && delta_named;

  struct Spot {
    std::string label;
    MixedStrategy host;
  };
  const std::vector<Spot> spots{
      {"Q*:1,1,1", q111},
      {"Q*:1/2,1/2,1/2", host_lambda_strategy({Rational(1, 2), Rational(1, 2), Rational(1, 2)})},
      {"pi=1/2,1/3,1/6;lambda=1/2,1/2,1/2",
       host_from_marginal({Rational(1, 2), Rational(1, 3), Rational(1, 6)},
                          {Rational(1, 2), Rational(1, 2), Rational(1, 2)})},
      {"pi=1/2,1/4,1/4;lambda=1/3,2/3,1/2",
       host_from_marginal({Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                          {Rational(1, 3), Rational(2, 3), Rational(1, 2)})},
      {"1L", MixedStrategy::pure(host_labels(), "1L")},
  };
  Json spot_json = Json::array();
  for (const auto& s : spots) {
    const auto br = best_response(c, s.host);
    const auto pi = car_marginal(s.host);
    const Rational predicted = 1 - std::min({pi[0], pi[1], pi[2]});
    ok = ok && br.value == predicted;
    spot_json.push_back(Json{{"host", s.label},
                             {"value", to_json(br.value)},
                             {"one_minus_min_pi", to_json(predicted)},
                             {"best_pure_set", br.best_pure_set}});
  }

  if (format == Format::kJson) {
    Json host_vertices = Json::array();
    for (const auto& v : host.vertices) {
      Json h = to_json(v);
      const auto l = lambda_of(v);
      if (l) h["lambda"] = to_json(RationalVector(l->begin(), l->end()));
      host_vertices.push_back(h);
    }
    Json gamma_json = Json::array();
    for (const auto& e : gamma_pure) gamma_json.push_back(to_json(e));
    Json j{{"contestant_matrix", to_json(c)},
           {"elimination", to_json(trace)},
           {"value", to_json(sol.value)},
           {"contestant_minimax", to_json(cont.vertices.front())},
           {"contestant_minimax_count", cont.vertices.size()},
           {"host_minimax_vertices", host_vertices},
           {"maverick_pure_equilibria", gamma_json},
           {"superstitious",
            Json{{"named_equilibrium", "(P*, Q*_{1,1,1})"},
                 {"named_is_equilibrium", delta_named},
                 {"extreme_equilibria", delta_set.equilibria.size()},
                 {"components", delta_set.components.size()}}},
           {"proposition_checks", spot_json},
           {"verified", ok}};
    return {dump(j), ok};
  }

  std::ostringstream os;
  os << "Monty Hall game report\n======================\n\n";
  os << "Contestant payoff matrix C (1 = car won)\n\n" << render_table(c, true) << '\n';
  os << "Weak dominance elimination\n\n";
  for (const auto& s : trace.steps) {
    os << "  " << s.step << ". " << to_string(s.axis) << ' ' << s.eliminated << " by " << s.dominator
       << " (" << s.kind << ")\n";
  }
  os << "\nReduced matrix\n\n" << render_table(trace.reduced) << '\n';
  os << "Game value V = " << to_string(sol.value) << '\n';
  os << "Unique Contestant minimax strategy P* = " << render_vector(cont.vertices.front().probs())
     << "  (" << cont.vertices.size() << " extreme point)\n\n";
  os << "Host minimax strategies: " << host.vertices.size() << " extreme points\n";
  for (const auto& v : host.vertices) {
    os << "  " << render_vector(v.probs());
    if (const auto l = lambda_of(v)) os << "  = Q*_{" << lambda_string(*l) << "}";
    os << '\n';
  }
  os << "\nMaverick Host: pure equilibria\n";
  for (const auto& e : gamma_pure) {
    os << "  (" << e.contestant.support().front() << ", " << e.host.support().front() << ")  payoffs ("
       << to_string(e.contestant_payoff) << ", " << to_string(e.host_payoff) << ")\n";
  }
  os << "\nSuperstitious Host\n";
  os << "  (P*, Q*_{1,1,1}) is a Nash equilibrium: " << (delta_named ? "yes" : "NO") << '\n';
  os << "  extreme equilibria of the full game: " << delta_set.equilibria.size() << " in "
     << delta_set.components.size() << " component(s)\n";
  os << "\nBest response value against Host mixtures (1 - min pi)\n";
  for (const auto& s : spot_json) {
    os << "  " << s["host"].get<std::string>() << ": value " << s["value"].get<std::string>()
       << ", 1 - min pi " << s["one_minus_min_pi"].get<std::string>() << ", best {";
    for (std::size_t i = 0; i < s["best_pure_set"].size(); ++i) {
      os << (i ? ", " : "") << s["best_pure_set"][i].get<std::string>();
    }
    os << "}\n";
  }
  os << "\nall checks " << (ok ? "passed" : "FAILED") << '\n';
  return {os.str(), ok};
}

}  // namespace montyhall

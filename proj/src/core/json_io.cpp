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

#include "core/json_io.hpp"

#include "core/error.hpp"

namespace montyhall {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw Error(ErrorCode::kInvalidArgument, "rational must be a \"p/q\" string or an integer");
}

Json to_json(const Playout& p) {
  return Json{{"car_door", p.car_door.index()},
              {"pick", p.pick.index()},
              {"revealed", p.revealed.index()},
              {"revealed_side", std::string(1, to_char(p.revealed_side))},
              {"final_choice", p.final_choice.index()},
              {"contestant_wins", p.contestant_wins}};
}

namespace {

Json entries_json(const PayoffMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries()) rows.push_back(to_json(row));
  return rows;
}

std::vector<RationalVector> entries_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "entries must be an array of rows");
  std::vector<RationalVector> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::kInvalidArgument, "matrix row must be an array");
    RationalVector r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> labels_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("matrix JSON needs a \"") + key + "\" array");
  }
  std::vector<std::string> out;
  for (const auto& s : j.at(key)) {
    if (!s.is_string()) throw Error(ErrorCode::kInvalidArgument, "labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

Json to_json(const PayoffMatrix& m) {
  return Json{{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", entries_json(m)}};
}

Json to_json(const Bimatrix& b) {
  return Json{{"rows", b.contestant.row_labels()},
              {"cols", b.contestant.col_labels()},
              {"contestant", entries_json(b.contestant)},
              {"host", entries_json(b.host)}};
}

PayoffMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) {
    throw Error(ErrorCode::kInvalidArgument, "matrix JSON needs rows, cols and entries");
  }
  return PayoffMatrix(labels_from_json(j, "rows"), labels_from_json(j, "cols"),
                      entries_from_json(j.at("entries")));
}

Bimatrix bimatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("contestant") || !j.contains("host")) {
    throw Error(ErrorCode::kInvalidArgument, "bimatrix JSON needs rows, cols, contestant and host");
  }
  const auto rows = labels_from_json(j, "rows");
  const auto cols = labels_from_json(j, "cols");
  return Bimatrix::make(PayoffMatrix(rows, cols, entries_from_json(j.at("contestant"))),
                        PayoffMatrix(rows, cols, entries_from_json(j.at("host"))));
}

Json to_json(const MixedStrategy& s) {
  return Json{{"labels", s.labels()}, {"probs", to_json(s.probs())}, {"support", s.support()}};
}

Json to_json(const EliminationTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"step", s.step},
                         {"axis", to_string(s.axis)},
                         {"eliminated", s.eliminated},
                         {"dominator", s.dominator},
                         {"kind", s.kind}});
  }
  return Json{{"steps", steps},
              {"surviving_rows", t.reduced.row_labels()},
              {"surviving_cols", t.reduced.col_labels()},
              {"reduced", to_json(t.reduced)}};
}

Json to_json(const DominanceRelation& d) {
  Json j{{"dominator", d.dominator_label}, {"dominated", d.dominated_label}, {"kind", to_string(d.kind)}};
  j["witness"] = d.witness ? Json(*d.witness) : Json(nullptr);
  return j;
}

Json to_json(const ZeroSumSolution& s) {
  return Json{{"value", to_json(s.value)},
              {"method", s.method},
              {"contestant_optimal", to_json(s.contestant_optimal)},
              {"host_optimal", to_json(s.host_optimal)},
              {"certificate",
               Json{{"contestant_guarantee", to_json(s.contestant_guarantee)},
                    {"host_guarantee", to_json(s.host_guarantee)}}}};
}

Json to_json(const MinimaxSet& s) {
  Json vertices = Json::array();
  for (const auto& v : s.vertices) vertices.push_back(to_json(v));
  return Json{{"side", to_string(s.side)},
              {"value", to_json(s.value)},
              {"vertex_count", s.vertices.size()},
              {"vertices", vertices}};
}

Json to_json(const NashEquilibrium& e) {
  Json j{{"kind", e.pure ? "pure" : "mixed"},
         {"contestant", to_json(e.contestant)},
         {"host", to_json(e.host)},
         {"payoffs", Json::array({to_json(e.contestant_payoff), to_json(e.host_payoff)})}};
  j["component"] = e.component >= 0 ? Json(e.component) : Json(nullptr);
  return j;
}

Json to_json(const NashSet& s) {
  Json eqs = Json::array();
  for (const auto& e : s.equilibria) eqs.push_back(to_json(e));
  Json comps = Json::array();
  for (const auto& c : s.components) {
    comps.push_back(Json{{"equilibria", c.equilibria}, {"continuum", c.continuum}});
  }
  return Json{{"equilibria", eqs}, {"components", comps}};
}

Json to_json(const BestResponseReport& r) {
  Json excluded = Json::array();
  for (const auto& e : r.excluded) {
    excluded.push_back(Json{{"strategy", e.strategy}, {"rule", e.rule}, {"payoff", to_json(e.payoff)}});
  }
  Json j{{"value", to_json(r.value)},
         {"best_pure_set", r.best_pure_set},
         {"payoffs", to_json(r.payoffs)},
         {"excluded", excluded}};
  if (r.pi) {
    j["pi"] = to_json(RationalVector(r.pi->begin(), r.pi->end()));
    j["one_minus_min_pi"] = to_json(1 - std::min({(*r.pi)[0], (*r.pi)[1], (*r.pi)[2]}));
  }
  return j;
}

Json to_json(const SimResult& r) {
  return Json{{"trials", r.trials},
              {"wins", r.wins},
              {"empirical_rate", to_json(r.empirical_rate)},
              {"empirical_rate_decimal", to_double(r.empirical_rate)},
              {"exact_rate", to_json(r.exact_rate)},
              {"sigma", r.sigma},
              {"z_score", r.z_score}};
}

Json to_json(const FullSupportReport& r) {
  Json dominated = Json::array();
  for (const auto& d : r.dominated) {
    dominated.push_back(Json{{"strategy", d.label},
                             {"payoff", to_json(d.payoff)},
                             {"strictly_below", d.strictly_below}});
  }
  return Json{{"fully_supported", r.fully_supported},
              {"best_response_value", to_json(r.best_response_value)},
              {"dominated", dominated},
              {"exclusion_holds", r.exclusion_holds}};
}

Json to_json(const HostIndifferenceReport& r) {
  Json j{{"host_payoffs", to_json(r.host_payoffs)}, {"constant", r.constant}};
  j["constant_value"] = r.constant_value ? to_json(*r.constant_value) : Json(nullptr);
  j["theorem_case"] = r.theorem_case;
  return j;
}

Json to_json(const ResponseClassification& c) {
  return Json{{"theorem_case", c.theorem_case}, {"support", c.support}};
}

}  // namespace montyhall

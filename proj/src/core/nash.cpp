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

#include "core/nash.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace montyhall {
namespace {

Rational min_entry(const PayoffMatrix& m) {
  Rational lo = m.at(0, 0);
  for (const auto& row : m.entries()) {
    for (const auto& x : row) lo = std::min(lo, x);
  }
  return lo;
}

RationalVector normalized(const RationalVector& v) {
  const Rational total = sum(v);
  RationalVector out(v);
  for (auto& x : out) x /= total;
  return out;
}

bool is_point_mass(const RationalVector& v) {
  return std::count_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; }) == 1;
}

NashEquilibrium make_equilibrium(const Bimatrix& game, RationalVector x, RationalVector y) {
  NashEquilibrium eq;
  eq.pure = is_point_mass(x) && is_point_mass(y);
  eq.contestant_payoff = expected_payoff(x, game.contestant, y);
  eq.host_payoff = expected_payoff(x, game.host, y);
  eq.contestant = MixedStrategy(game.contestant.row_labels(), std::move(x));
  eq.host = MixedStrategy(game.contestant.col_labels(), std::move(y));
  return eq;
}

}  // namespace

std::vector<NashEquilibrium> pure_nash(const Bimatrix& game) {
  const auto& a = game.contestant;
  const auto& b = game.host;
  std::vector<NashEquilibrium> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Rational row_max = *std::max_element(b.row(r).begin(), b.row(r).end());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (b.at(r, c) != row_max) continue;
      bool col_max = true;
      for (std::size_t k = 0; k < a.rows() && col_max; ++k) col_max = a.at(k, c) <= a.at(r, c);
      if (!col_max) continue;
      RationalVector x(a.rows(), 0);
      RationalVector y(a.cols(), 0);
      x[r] = 1;
      y[c] = 1;
      out.push_back(make_equilibrium(game, std::move(x), std::move(y)));
    }
  }
  return out;
}

NashSet mixed_nash(const Bimatrix& game) {
  const std::size_t m = game.contestant.rows();
  const std::size_t n = game.contestant.cols();
  if (m + n > 64) throw Error(ErrorCode::kInvalidArgument, "game too large for label bitmasks");
  const auto a = game.contestant.shifted(1 - min_entry(game.contestant));
  const auto b = game.host.shifted(1 - min_entry(game.host));

  RationalMatrix p_rows;  // columns of B: one constraint per Host strategy
  for (std::size_t c = 0; c < n; ++c) p_rows.push_back(b.column(c));
  const auto p_vertices = enumerate_vertices(p_rows, RationalVector(n, 1), Sense::kLessEqual, false);
  const auto q_vertices =
      enumerate_vertices(a.entries(), RationalVector(m, 1), Sense::kLessEqual, false);

  // Labels 0..m-1 are Contestant strategies, m..m+n-1 Host strategies.
  struct Labelled {
    RationalVector point;
    std::uint64_t labels;
  };
  std::vector<Labelled> xs;
  std::vector<Labelled> ys;
  for (const auto& v : p_vertices) {
    if (v.zero_coords.size() == m) continue;
    std::uint64_t l = 0;
    for (auto i : v.zero_coords) l |= std::uint64_t{1} << i;
    for (auto j : v.tight_constraints) l |= std::uint64_t{1} << (m + j);
    xs.push_back({v.point, l});
  }
  for (const auto& v : q_vertices) {
    if (v.zero_coords.size() == n) continue;
    std::uint64_t l = 0;
    for (auto j : v.zero_coords) l |= std::uint64_t{1} << (m + j);
    for (auto i : v.tight_constraints) l |= std::uint64_t{1} << i;
    ys.push_back({v.point, l});
  }

  const std::uint64_t all = (m + n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << (m + n)) - 1;
  NashSet out;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if ((xs[i].labels | ys[j].labels) != all) continue;
      edges.emplace_back(i, j);
      out.equilibria.push_back(
          make_equilibrium(game, normalized(xs[i].point), normalized(ys[j].point)));
    }
  }

  // Connected components of the bipartite graph; x-vertex i is node i, y-vertex j is xs.size()+j.
  std::vector<std::size_t> parent(xs.size() + ys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [i, j] : edges) parent[find(i)] = find(xs.size() + j);
  std::vector<int> component_of_root(parent.size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto root = find(edges[e].first);
    if (component_of_root[root] < 0) {
      component_of_root[root] = static_cast<int>(out.components.size());
      out.components.push_back({{}, false});
    }
    auto& comp = out.components[static_cast<std::size_t>(component_of_root[root])];
    comp.equilibria.push_back(e);
    out.equilibria[e].component = component_of_root[root];
  }
  for (auto& comp : out.components) comp.continuum = comp.equilibria.size() > 1;
  return out;
}

bool is_nash_equilibrium(const Bimatrix& game, const MixedStrategy& contestant,
                         const MixedStrategy& host) {
  const auto& x = contestant.probs();
  const auto& y = host.probs();
  const auto by_row = column_payoffs(game.contestant, y);
  const auto by_col = row_payoffs(x, game.host);
  const Rational u = expected_payoff(x, game.contestant, y);
  const Rational w = expected_payoff(x, game.host, y);
  return *std::max_element(by_row.begin(), by_row.end()) == u &&
         *std::max_element(by_col.begin(), by_col.end()) == w;
}

BestResponseReport best_response(const PayoffMatrix& matrix, const MixedStrategy& host) {
  if (host.labels() != matrix.col_labels()) {
    throw Error(ErrorCode::kInvalidArgument, "Host strategy labels do not match the matrix columns");
  }
  BestResponseReport report;
  report.payoffs = column_payoffs(matrix, host.probs());
  report.value = *std::max_element(report.payoffs.begin(), report.payoffs.end());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    if (report.payoffs[r] == report.value) report.best_pure_set.push_back(matrix.row_labels()[r]);
  }
  if (!matrix.is_monty_hall_grid() || !(matrix == build_contestant_matrix())) return report;

  const auto pi = car_marginal(host);
  report.pi = pi;
  const Rational min_pi = std::min({pi[0], pi[1], pi[2]});
  for (int x = 1; x <= 3; ++x) {
    const auto door = std::to_string(x);
    const auto payoff_of = [&](const std::string& label) {
      return report.payoffs[matrix.row_index(label)];
    };
    if (pi[static_cast<std::size_t>(x - 1)] < 1 - min_pi) {
      report.excluded.push_back({door + "NN", "NN", payoff_of(door + "NN")});
    }
    if (sgn(host.prob(door + "L")) > 0) {
      report.excluded.push_back({door + "SN", "I", payoff_of(door + "SN")});
    }
    if (sgn(host.prob(door + "R")) > 0) {
      report.excluded.push_back({door + "NS", "II", payoff_of(door + "NS")});
    }
  }
  return report;
}

ResponseClassification classify_equilibrium_response(const std::array<Rational, 3>& pi,
                                                     bool host_fully_supported) {
  if (!host_fully_supported) {
    throw Error(ErrorCode::kInvalidArgument,
                "Host strategy is not fully supported: the classification does not apply");
  }
  if (!is_probability_vector(RationalVector(pi.begin(), pi.end()))) {
    throw Error(ErrorCode::kInvalidArgument, "pi must be nonnegative and sum to 1");
  }
  const Rational lo = std::min({pi[0], pi[1], pi[2]});
  ResponseClassification out{0, {}};
  for (int x = 1; x <= 3; ++x) {
    if (pi[static_cast<std::size_t>(x - 1)] == lo) out.support.push_back(std::to_string(x) + "SS");
  }
  out.theorem_case = static_cast<int>(out.support.size());
  return out;
}

HostIndifferenceReport verify_host_indifference(const PayoffMatrix& host_matrix,
                                                const MixedStrategy& contestant) {
  if (contestant.labels() != host_matrix.row_labels()) {
    throw Error(ErrorCode::kInvalidArgument, "Contestant strategy labels do not match the matrix rows");
  }
  HostIndifferenceReport report;
  report.host_payoffs = row_payoffs(contestant.probs(), host_matrix);
  const auto& v = report.host_payoffs;
  report.constant = std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v.front(); });
  if (report.constant) report.constant_value = v.front();
  const auto support = contestant.support();
  const bool all_switch = std::all_of(support.begin(), support.end(), [](const std::string& s) {
    return s.size() == 3 && s.substr(1) == "SS";
  });
  report.theorem_case = all_switch ? static_cast<int>(support.size()) : 0;
  return report;
}

}  // namespace montyhall

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

#ifndef MONTYHALL_CORE_COMMANDS_HPP_
#define MONTYHALL_CORE_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "core/dominance.hpp"
#include "core/json_io.hpp"
#include "core/matrix.hpp"
#include "core/strategy.hpp"

namespace montyhall {

enum class Format { kJson, kTable, kCsv };
Format parse_format(std::string_view s);

// Rendered command result. ok is false when the command ran but one of its
// own verification checks (certificates, deviation tests) failed.
struct CommandOutput {
  std::string text;
  bool ok = true;
};

// Fixture vocabulary for single matrices: C, c3 (the reduced 3x3),
// diag:<d1,...,dn>, any bimatrix fixture (its Contestant component), or a
// path to a matrix/bimatrix JSON file.
// Throws Error(kUnknownFixture) when nothing matches.
PayoffMatrix resolve_matrix(std::string_view source);

struct ResolvedGame {
  std::string name;
  Bimatrix game;
  // Host strategy fixed by "beta:<Q>".
  std::optional<MixedStrategy> fixed_host;
};

// Bimatrix fixtures: C or zerosum (h = -c), alpha, beta, beta:<Q>, gamma,
// delta, the long Host-kind names, or a JSON file (a single matrix is read
// as the zero-sum game it defines).
ResolvedGame resolve_bimatrix(std::string_view source);

CommandOutput cmd_build_matrix(std::string_view fixture, Format format);
CommandOutput cmd_reduce(std::string_view source, DominanceKind kind, ElimPolicy policy,
                         Format format);
// method: lp, indifference, inverse, diagonal or all.
CommandOutput cmd_solve(std::string_view source, std::string_view method, Format format);
CommandOutput cmd_enumerate_minimax(std::string_view source, Player side, Format format);
// mode: pure, mixed or all.
CommandOutput cmd_nash(std::string_view source, std::string_view mode, Format format);
// host_spec is anything parse_strategy accepts for the Host.
CommandOutput cmd_best_response(std::string_view host_spec, Format format);
CommandOutput cmd_simulate(std::string_view contestant_spec, std::string_view host_spec,
                           std::uint64_t trials, std::uint64_t seed, Format format,
                           unsigned workers = 0);
CommandOutput cmd_paper_report(Format format);

// JSON bodies shared with the HTTP service.
Json solve_json(std::string_view source, std::string_view method, bool* verified);
Json solve_json(const PayoffMatrix& m, std::string_view source, std::string_view method,
                bool* verified);
Json nash_json(std::string_view source, std::string_view mode, bool* verified);
Json nash_json(const ResolvedGame& game, std::string_view mode, bool* verified);
Json best_response_json(const MixedStrategy& host);

}  // namespace montyhall

#endif  // MONTYHALL_CORE_COMMANDS_HPP_

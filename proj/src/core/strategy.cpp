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

#include "core/strategy.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace montyhall {

Player parse_player(std::string_view s) {
  if (s == "contestant" || s == "row") return Player::kContestant;
  if (s == "host" || s == "column") return Player::kHost;
  throw Error(ErrorCode::kInvalidArgument, "side must be contestant or host");
}

std::string to_string(Player p) { return p == Player::kContestant ? "contestant" : "host"; }

MixedStrategy::MixedStrategy(std::vector<std::string> labels, RationalVector probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "mixed strategy: label and probability counts differ");
  }
  if (!is_probability_vector(probs_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "mixed strategy: probabilities must be nonnegative and sum to 1");
  }
}

MixedStrategy MixedStrategy::pure(const std::vector<std::string>& labels, std::string_view which) {
  RationalVector p(labels.size(), 0);
  const auto it = std::find(labels.begin(), labels.end(), which);
  if (it == labels.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown strategy label '" + std::string(which) + "'");
  }
  p[static_cast<std::size_t>(it - labels.begin())] = 1;
  return MixedStrategy(labels, std::move(p));
}

MixedStrategy MixedStrategy::uniform_over(const std::vector<std::string>& labels,
                                          const std::vector<std::string>& support) {
  RationalVector p(labels.size(), 0);
  for (const auto& s : support) {
    const auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown strategy label '" + s + "'");
    }
    p[static_cast<std::size_t>(it - labels.begin())] = Rational(1, support.size());
  }
  return MixedStrategy(labels, std::move(p));
}

Rational MixedStrategy::prob(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return probs_[i];
  }
  return 0;
}

std::vector<std::string> MixedStrategy::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (sgn(probs_[i]) > 0) out.push_back(labels_[i]);
  }
  return out;
}

bool MixedStrategy::fully_supported() const {
  return std::all_of(probs_.begin(), probs_.end(), [](const Rational& p) { return sgn(p) > 0; });
}

RationalVector row_payoffs(const RationalVector& x, const PayoffMatrix& m) {
  if (x.size() != m.rows()) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  RationalVector out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(x[r]) == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += x[r] * m.at(r, c);
  }
  return out;
}

RationalVector column_payoffs(const PayoffMatrix& m, const RationalVector& y) {
  if (y.size() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  RationalVector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(y[c]) != 0) out[r] += m.at(r, c) * y[c];
    }
  }
  return out;
}

Rational expected_payoff(const RationalVector& x, const PayoffMatrix& m, const RationalVector& y) {
  const auto per_row = column_payoffs(m, y);
  if (x.size() != per_row.size()) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  Rational total = 0;
  for (std::size_t r = 0; r < x.size(); ++r) total += x[r] * per_row[r];
  return total;
}

RationalVector lambda_expansion(const std::array<Rational, 3>& lambda) {
  RationalVector q;
  for (const auto& l : lambda) {
    q.push_back(l / 3);
    q.push_back((1 - l) / 3);
  }
  return q;
}

MixedStrategy host_from_marginal(const std::array<Rational, 3>& pi,
                                 const std::array<Rational, 3>& lambda) {
  if (!is_probability_vector(RationalVector(pi.begin(), pi.end()))) {
    throw Error(ErrorCode::kInvalidArgument, "pi must be nonnegative and sum to 1");
  }
  RationalVector q;
  for (std::size_t x = 0; x < 3; ++x) {
    if (sgn(lambda[x]) < 0 || lambda[x] > 1) {
      throw Error(ErrorCode::kInvalidArgument, "lambda entries must lie in [0,1]");
    }
    q.push_back(pi[x] * lambda[x]);
    q.push_back(pi[x] * (1 - lambda[x]));
  }
  return MixedStrategy(host_labels(), std::move(q));
}

MixedStrategy host_lambda_strategy(const std::array<Rational, 3>& lambda) {
  return host_from_marginal({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, lambda);
}

std::array<Rational, 3> car_marginal(const MixedStrategy& host) {
  if (host.labels() != host_labels()) {
    throw Error(ErrorCode::kInvalidArgument, "expected a mixture over the 6 Host strategies");
  }
  return {host.prob(0) + host.prob(1), host.prob(2) + host.prob(3), host.prob(4) + host.prob(5)};
}

MixedStrategy contestant_minimax() {
  return MixedStrategy::uniform_over(contestant_labels(), {"1SS", "2SS", "3SS"});
}

std::array<Rational, 3> parse_triple(std::string_view text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 3) throw Error(ErrorCode::kInvalidArgument, "expected three rationals");
  return {v[0], v[1], v[2]};
}

MixedStrategy parse_strategy(std::string_view text, Player side) {
  const auto& labels = side == Player::kContestant ? contestant_labels() : host_labels();
  if (text == "P*") {
    if (side != Player::kContestant) {
      throw Error(ErrorCode::kInvalidArgument, "P* is a Contestant strategy");
    }
    return contestant_minimax();
  }
  if (text.rfind("Q*:", 0) == 0) {
    if (side != Player::kHost) throw Error(ErrorCode::kInvalidArgument, "Q* is a Host strategy");
    return host_lambda_strategy(parse_triple(text.substr(3)));
  }
  if (text.rfind("pi=", 0) == 0) {
    if (side != Player::kHost) throw Error(ErrorCode::kInvalidArgument, "pi/lambda is a Host strategy");
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.substr(semi + 1).rfind("lambda=", 0) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "expected pi=a,b,c;lambda=x,y,z");
    }
    return host_from_marginal(parse_triple(text.substr(3, semi - 3)),
                              parse_triple(text.substr(semi + 8)));
  }
  if (std::find(labels.begin(), labels.end(), text) != labels.end()) {
    return MixedStrategy::pure(labels, text);
  }
  if (text.find(':') != std::string_view::npos) {
    RationalVector p(labels.size(), 0);
    std::string_view rest = text;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw Error(ErrorCode::kInvalidArgument, "expected label:prob in '" + std::string(item) + "'");
      }
      const auto label = item.substr(0, colon);
      const auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) {
        throw Error(ErrorCode::kInvalidArgument, "unknown strategy label '" + std::string(label) + "'");
      }
      p[static_cast<std::size_t>(it - labels.begin())] += parse_rational(item.substr(colon + 1));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return MixedStrategy(labels, std::move(p));
  }
  auto p = parse_rational_list(text);
  if (p.size() != labels.size()) {
    throw Error(ErrorCode::kInvalidArgument, "strategy needs " + std::to_string(labels.size()) +
                                                 " probabilities, got " + std::to_string(p.size()));
  }
  return MixedStrategy(labels, std::move(p));
}

}  // namespace montyhall

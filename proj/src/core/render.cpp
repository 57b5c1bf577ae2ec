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

#include "core/render.hpp"

#include <algorithm>
#include <sstream>

namespace montyhall {
namespace {

std::string grid(const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels,
                 const std::vector<std::vector<std::string>>& cells, bool group_by_door) {
  std::size_t label_w = 0;
  for (const auto& l : row_labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> w(col_labels.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    w[c] = col_labels[c].size();
    for (const auto& row : cells) w[c] = std::max(w[c], row[c].size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t width) {
    os << std::string(width - s.size(), ' ') << s;
  };
  pad("", label_w);
  os << " |";
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    os << ' ';
    pad(col_labels[c], w[c]);
  }
  os << '\n' << std::string(label_w + 1, '-') << '+';
  for (auto cw : w) os << std::string(cw + 1, '-');
  os << '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    if (group_by_door && r > 0 && row_labels[r][0] != row_labels[r - 1][0]) os << '\n';
    os << row_labels[r] << std::string(label_w - row_labels[r].size(), ' ') << " |";
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
      os << ' ';
      pad(cells[r][c], w[c]);
    }
    os << '\n';
  }
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string csv(const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels,
                const std::vector<std::vector<std::string>>& cells) {
  std::ostringstream os;
  for (const auto& l : col_labels) os << ',' << csv_escape(l);
  os << '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    os << csv_escape(row_labels[r]);
    for (const auto& cell : cells[r]) os << ',' << csv_escape(cell);
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<std::string>> cells_of(const PayoffMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m.entries()) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<std::string>> cells_of(const Bimatrix& b, const char* open,
                                               const char* sep, const char* close) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r < b.contestant.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < b.contestant.cols(); ++c) {
      row.push_back(open + to_string(b.contestant.at(r, c)) + sep + to_string(b.host.at(r, c)) + close);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string render_table(const PayoffMatrix& m, bool group_by_door) {
  return grid(m.row_labels(), m.col_labels(), cells_of(m), group_by_door);
}

std::string render_table(const Bimatrix& b, bool group_by_door) {
  return grid(b.contestant.row_labels(), b.contestant.col_labels(), cells_of(b, "(", ",", ")"),
              group_by_door);
}

std::string render_csv(const PayoffMatrix& m) {
  return csv(m.row_labels(), m.col_labels(), cells_of(m));
}

std::string render_csv(const Bimatrix& b) {
  return csv(b.contestant.row_labels(), b.contestant.col_labels(), cells_of(b, "", ";", ""));
}

std::string render_vector(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string render_support(const MixedStrategy& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (sgn(s.prob(i)) == 0) continue;
    if (!out.empty()) out += ", ";
    out += s.labels()[i] + ":" + to_string(s.prob(i));
  }
  return out;
}

}  // namespace montyhall

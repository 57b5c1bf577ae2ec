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

#include "core/game.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace montyhall {

Door::Door(int index) : index_(index) {
  if (index < 1 || index > kDoorCount) {
    throw Error(ErrorCode::kInvalidArgument, "door must be 1, 2 or 3, got " + std::to_string(index));
  }
}

std::array<Door, 3> all_doors() { return {Door(1), Door(2), Door(3)}; }

char to_char(Side side) { return side == Side::kLeft ? 'L' : 'R'; }
char to_char(Action action) { return action == Action::kSwitch ? 'S' : 'N'; }

Door third_door(Door a, Door b) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "third_door needs two distinct doors");
  return Door(6 - a.index() - b.index());
}

Side side_of(Door pick, Door other) {
  if (pick == other) {
    throw Error(ErrorCode::kInvalidArgument, "side_of: door equals the pick");
  }
  return other < third_door(pick, other) ? Side::kLeft : Side::kRight;
}

Door door_on_side(Door pick, Side side) {
  int lo = 0;
  int hi = 0;
  for (Door d : all_doors()) {
    if (d == pick) continue;
    (lo == 0 ? lo : hi) = d.index();
  }
  return Door(side == Side::kLeft ? lo : hi);
}

std::string to_string(const HostPureStrategy& s) {
  return std::to_string(s.car_door.index()) + to_char(s.match_reveal);
}

std::string to_string(const ContestantPureStrategy& s) {
  return std::to_string(s.pick.index()) + to_char(s.on_left_revealed) +
         to_char(s.on_right_revealed);
}

namespace {

int parse_door_char(char c, std::string_view label) {
  if (c < '1' || c > '3') {
    throw Error(ErrorCode::kInvalidArgument, "bad door in strategy label '" + std::string(label) + "'");
  }
  return c - '0';
}

Action parse_action(char c, std::string_view label) {
  if (c == 'S') return Action::kSwitch;
  if (c == 'N') return Action::kNotswitch;
  throw Error(ErrorCode::kInvalidArgument, "bad action in strategy label '" + std::string(label) + "'");
}

}  // namespace

HostPureStrategy parse_host_strategy(std::string_view label) {
  if (label.size() != 2 || (label[1] != 'L' && label[1] != 'R')) {
    throw Error(ErrorCode::kInvalidArgument, "not a Host strategy label: '" + std::string(label) + "'");
  }
  return {Door(parse_door_char(label[0], label)), label[1] == 'L' ? Side::kLeft : Side::kRight};
}

ContestantPureStrategy parse_contestant_strategy(std::string_view label) {
  if (label.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a Contestant strategy label: '" + std::string(label) + "'");
  }
  return {Door(parse_door_char(label[0], label)), parse_action(label[1], label),
          parse_action(label[2], label)};
}

const std::vector<HostPureStrategy>& host_strategies() {
  static const std::vector<HostPureStrategy> all = [] {
    std::vector<HostPureStrategy> v;
    for (Door d : all_doors()) {
      for (Side s : {Side::kLeft, Side::kRight}) v.push_back({d, s});
    }
    return v;
  }();
  return all;
}

const std::vector<ContestantPureStrategy>& contestant_strategies() {
  static const std::vector<ContestantPureStrategy> all = [] {
    std::vector<ContestantPureStrategy> v;
    for (Door d : all_doors()) {
      for (Action l : {Action::kSwitch, Action::kNotswitch}) {
        for (Action r : {Action::kSwitch, Action::kNotswitch}) v.push_back({d, l, r});
      }
    }
    return v;
  }();
  return all;
}

const std::vector<std::string>& host_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (const auto& s : host_strategies()) v.push_back(to_string(s));
    return v;
  }();
  return labels;
}

const std::vector<std::string>& contestant_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (const auto& s : contestant_strategies()) v.push_back(to_string(s));
    return v;
  }();
  return labels;
}

std::size_t index_of(const HostPureStrategy& s) {
  return static_cast<std::size_t>((s.car_door.index() - 1) * 2 + (s.match_reveal == Side::kRight));
}

std::size_t index_of(const ContestantPureStrategy& s) {
  return static_cast<std::size_t>((s.pick.index() - 1) * 4 +
                                  (s.on_left_revealed == Action::kNotswitch) * 2 +
                                  (s.on_right_revealed == Action::kNotswitch));
}

Door reveal_for(const HostPureStrategy& host, Door pick) {
  if (pick == host.car_door) return door_on_side(pick, host.match_reveal);
  return third_door(pick, host.car_door);
}

Playout play(const HostPureStrategy& host, const ContestantPureStrategy& contestant) {
  const Door pick = contestant.pick;
  const Door revealed = reveal_for(host, pick);
  const Side side = side_of(pick, revealed);
  const Door final_choice =
      contestant.action_for(side) == Action::kSwitch ? third_door(pick, revealed) : pick;
  return Playout{host.car_door, pick, revealed, side, final_choice, final_choice == host.car_door};
}

DoorPermutation::DoorPermutation(std::array<int, 3> image) : image_(image) {
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw Error(ErrorCode::kInvalidArgument, "not a permutation of doors 1,2,3");
  }
}

const std::vector<DoorPermutation>& DoorPermutation::all() {
  static const std::vector<DoorPermutation> group = [] {
    std::vector<DoorPermutation> v;
    std::array<int, 3> image{1, 2, 3};
    do {
      v.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return v;
  }();
  return group;
}

DoorPermutation DoorPermutation::swap(int a, int b) {
  std::array<int, 3> image{1, 2, 3};
  std::swap(image.at(static_cast<std::size_t>(a - 1)), image.at(static_cast<std::size_t>(b - 1)));
  return DoorPermutation(image);
}

HostPureStrategy DoorPermutation::apply(const HostPureStrategy& s) const {
  const Door car = (*this)(s.car_door);
  const Door opened = (*this)(door_on_side(s.car_door, s.match_reveal));
  return {car, side_of(car, opened)};
}

ContestantPureStrategy DoorPermutation::apply(const ContestantPureStrategy& s) const {
  const Door pick = (*this)(s.pick);
  ContestantPureStrategy out{pick, Action::kSwitch, Action::kSwitch};
  for (Side side : {Side::kLeft, Side::kRight}) {
    const Side image_side = side_of(pick, (*this)(door_on_side(s.pick, side)));
    (image_side == Side::kLeft ? out.on_left_revealed : out.on_right_revealed) = s.action_for(side);
  }
  return out;
}

std::string DoorPermutation::to_string() const {
  return std::to_string(image_[0]) + std::to_string(image_[1]) + std::to_string(image_[2]);
}

}  // namespace montyhall

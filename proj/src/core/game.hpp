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

#ifndef MONTYHALL_CORE_GAME_HPP_
#define MONTYHALL_CORE_GAME_HPP_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace montyhall {

// A door of the show, numbered 1..3 from left to right.
class Door {
 public:
  // Throws Error(kInvalidArgument) outside 1..3.
  explicit Door(int index);

  int index() const noexcept { return index_; }
  auto operator<=>(const Door&) const = default;

 private:
  int index_;
};

inline constexpr int kDoorCount = 3;

std::array<Door, 3> all_doors();

// Pick-relative side: Left is the lower-numbered of the two doors other than
// the pick, Right the higher-numbered one.
enum class Side { kLeft, kRight };

enum class Action { kSwitch, kNotswitch };

char to_char(Side side);
char to_char(Action action);

// Left iff other is the smaller-indexed of the two doors != pick.
// Throws Error(kInvalidArgument) if other == pick.
Side side_of(Door pick, Door other);

// The door on the given side of pick.
Door door_on_side(Door pick, Side side);

// The door that is neither a nor b (a != b).
Door third_door(Door a, Door b);

// Car placement plus which side to open when the contestant picked the car.
struct HostPureStrategy {
  Door car_door;
  Side match_reveal;

  auto operator<=>(const HostPureStrategy&) const = default;
};

// Initial pick plus the final action for each revealed side.
struct ContestantPureStrategy {
  Door pick;
  Action on_left_revealed;
  Action on_right_revealed;

  Action action_for(Side revealed) const {
    return revealed == Side::kLeft ? on_left_revealed : on_right_revealed;
  }
  auto operator<=>(const ContestantPureStrategy&) const = default;
};

std::string to_string(const HostPureStrategy& s);        // "2L"
std::string to_string(const ContestantPureStrategy& s);  // "1NS"
HostPureStrategy parse_host_strategy(std::string_view label);
ContestantPureStrategy parse_contestant_strategy(std::string_view label);

// Canonical orders 1L,1R,...,3R and 1SS,1SN,1NS,1NN,...,3NN.
const std::vector<HostPureStrategy>& host_strategies();
const std::vector<ContestantPureStrategy>& contestant_strategies();
const std::vector<std::string>& host_labels();
const std::vector<std::string>& contestant_labels();

// Position in the canonical order.
std::size_t index_of(const HostPureStrategy& s);
std::size_t index_of(const ContestantPureStrategy& s);

struct Playout {
  Door car_door;
  Door pick;
  Door revealed;
  Side revealed_side;
  Door final_choice;
  bool contestant_wins;

  bool operator==(const Playout&) const = default;
};

// Door Host opens for a given car placement and pick.
Door reveal_for(const HostPureStrategy& host, Door pick);

// Deterministic playout of one show under a pure-strategy profile.
Playout play(const HostPureStrategy& host, const ContestantPureStrategy& contestant);

// A relabelling of the doors. Maps door d to image[d-1].
class DoorPermutation {
 public:
  // Throws Error(kInvalidArgument) unless image is a permutation of {1,2,3}.
  explicit DoorPermutation(std::array<int, 3> image);

  static DoorPermutation identity() { return DoorPermutation({1, 2, 3}); }
  static const std::vector<DoorPermutation>& all();  // the 6 elements of S3

  // Transposition of doors a and b.
  static DoorPermutation swap(int a, int b);

  Door operator()(Door d) const { return Door(image_[d.index() - 1]); }
  const std::array<int, 3>& image() const { return image_; }

  // Acts on sides pick-relatively: the door on side s of the pick is mapped,
  // and its side is recomputed relative to the mapped pick.
  HostPureStrategy apply(const HostPureStrategy& s) const;
  ContestantPureStrategy apply(const ContestantPureStrategy& s) const;

  // Image string, e.g. "213" for the swap of doors 1 and 2.
  std::string to_string() const;

  bool operator==(const DoorPermutation&) const = default;

 private:
  std::array<int, 3> image_;
};

}  // namespace montyhall

#endif  // MONTYHALL_CORE_GAME_HPP_

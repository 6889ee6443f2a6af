// Copyright 2026 The armkin Authors
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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "armkin/arm_core.hpp"
#include "armkin/reach.hpp"

namespace armkin {

// Relative width of the equality band used for Critical and transition detection.
inline constexpr double kEpsRel = 1e-9;

double critical_tolerance(const SortedArm& arm, double z);

enum class Connectivity { One, Two, Critical, Infeasible };

struct ConnectivityReport {
  Connectivity variant = Connectivity::Infeasible;
  std::vector<double> sides;  // {z} plus lengths, descending
  double margin = 0.0;        // largest + tail - second - third; < 0 means two components
};

enum class StateBlock { GT_TOP, LT_TOP, GT_MID, LT_MID, GT_BOT, LT_BOT };

// Either an open block or a transition marker carrying the letters whose value z hits.
struct BlockState {
  bool at_transition = false;
  StateBlock block = StateBlock::GT_TOP;
  std::string letters;

  std::string label() const;
};

struct TransitionValue {
  char id = 'A';
  double z = 0.0;
  bool applicable = true;  // meaningful for this segment count
  bool reachable = false;  // inside the reach interval and > 0
};

struct TransitionValues {
  std::array<TransitionValue, 7> entries;  // A..G

  double at(char id) const { return entries[static_cast<std::size_t>(id - 'A')].z; }
  const TransitionValue& entry(char id) const { return entries[static_cast<std::size_t>(id - 'A')]; }
};

enum class PathClassId { I, II, III };

struct PathClass {
  PathClassId id = PathClassId::I;
  TransitionValues transitions;
  std::vector<double> vital;           // descending
  std::vector<StateBlock> sequence;    // blocks in the order met as z decreases
};

// Top three sorted lengths and tail sums; l3, s3, s4 are 0 when absent.
struct ArmSums {
  std::size_t n = 0;
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;
  double s3 = 0.0;  // sum of all but the two longest
  double s4 = 0.0;  // sum of all but the three longest
  double total = 0.0;
};

ArmSums arm_sums(const SortedArm& arm);

ConnectivityReport classify_connectivity(const SortedArm& arm, double z);
int component_count(Connectivity c);

BlockState state_block(const SortedArm& arm, double z);
TransitionValues transition_values(const SortedArm& arm);
PathClass path_class(const SortedArm& arm);
std::vector<double> vital_critical_values(const SortedArm& arm);

const char* to_string(Connectivity c);
const char* to_string(StateBlock b);
const char* to_string(PathClassId c);

}  // namespace armkin

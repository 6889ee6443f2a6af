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

#include "armkin/topology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace armkin {

double critical_tolerance(const SortedArm& arm, double z) { return kEpsRel * (arm.total() + std::abs(z)); }

ArmSums arm_sums(const SortedArm& arm) {
  ArmSums s;
  const auto& l = arm.lengths;
  s.n = l.size();
  s.l1 = l[0];
  s.l2 = l[1];
  if (s.n >= 3) s.l3 = l[2];
  s.s3 = std::accumulate(l.begin() + std::min<std::size_t>(2, s.n), l.end(), 0.0);
  s.s4 = std::accumulate(l.begin() + std::min<std::size_t>(3, s.n), l.end(), 0.0);
  s.total = arm.total();
  return s;
}

ConnectivityReport classify_connectivity(const SortedArm& arm, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw ValidationError("base length must be > 0");
  ConnectivityReport r;
  r.sides = arm.lengths;
  r.sides.push_back(z);
  std::sort(r.sides.begin(), r.sides.end(), std::greater<>());
  double tol = critical_tolerance(arm, z);
  ReachInterval reach = reach_closed(arm.lengths);
  if (!reach.contains(z, tol)) {
    r.variant = Connectivity::Infeasible;
    return r;
  }
  double tail = std::accumulate(r.sides.begin() + 3, r.sides.end(), 0.0);
  r.margin = r.sides[0] + tail - r.sides[1] - r.sides[2];
  if (std::abs(r.margin) <= tol) {
    r.variant = Connectivity::Critical;
  } else {
    r.variant = r.margin > 0.0 ? Connectivity::One : Connectivity::Two;
  }
  return r;
}

int component_count(Connectivity c) {
  switch (c) {
    case Connectivity::One:
    case Connectivity::Critical:
      return 1;
    case Connectivity::Two:
      return 2;
    case Connectivity::Infeasible:
      return 0;
  }
  return 0;
}

TransitionValues transition_values(const SortedArm& arm) {
  ArmSums s = arm_sums(arm);
  ReachInterval reach = reach_closed(arm.lengths);
  double tol = critical_tolerance(arm, 0.0);
  const double values[7] = {
      s.l1 + s.l2 - s.s3,         // A
      s.l1,                       // B
      s.l1,                       // C
      s.l1 - s.l2 + s.s3,         // D
      s.l3,                       // E
      s.l3,                       // F
      s.l2 + s.l3 - s.l1 - s.s4,  // G
  };
  TransitionValues out;
  for (std::size_t i = 0; i < 7; ++i) {
    TransitionValue& t = out.entries[i];
    t.id = static_cast<char>('A' + i);
    t.z = values[i];
    t.applicable = s.n >= 3 || t.id == 'A' || t.id == 'C' || t.id == 'D' || t.id == 'F';
    t.reachable = t.applicable && t.z > tol && reach.contains(t.z, tol);
  }
  return out;
}

BlockState state_block(const SortedArm& arm, double z) {
  if (!(z > 0.0)) throw ValidationError("base length must be > 0");
  double tol = critical_tolerance(arm, z);
  if (!reach_closed(arm.lengths).contains(z, tol)) throw ValidationError("base length outside the reach interval");
  ArmSums s = arm_sums(arm);

  BlockState out;
  TransitionValues tv = transition_values(arm);
  for (const TransitionValue& t : tv.entries) {
    if (t.applicable && std::abs(z - t.z) <= tol) out.letters.push_back(t.id);
  }
  bool on_boundary = std::abs(z - s.l1) <= tol || (s.n >= 3 && std::abs(z - s.l3) <= tol);

  double d;
  if (z > s.l1) {
    d = z + s.s3 - s.l1 - s.l2;
    out.block = d > 0.0 ? StateBlock::GT_TOP : StateBlock::LT_TOP;
  } else if (z > s.l3) {
    d = s.l1 + s.s3 - z - s.l2;
    out.block = d > 0.0 ? StateBlock::GT_MID : StateBlock::LT_MID;
  } else {
    d = s.l1 + z + s.s4 - s.l2 - s.l3;
    out.block = d > 0.0 ? StateBlock::GT_BOT : StateBlock::LT_BOT;
  }
  out.at_transition = on_boundary || std::abs(d) <= tol;
  if (!out.at_transition) out.letters.clear();
  return out;
}

PathClass path_class(const SortedArm& arm) {
  ArmSums s = arm_sums(arm);
  double tol = critical_tolerance(arm, 0.0);
  PathClass pc;
  pc.transitions = transition_values(arm);
  std::string vital_ids;
  if (s.n == 2) {
    pc.id = PathClassId::III;
  } else if (s.l2 <= s.s3 + tol) {
    pc.id = PathClassId::I;
  } else if (s.n == 3 && std::abs(s.l1 - s.l2) <= tol) {
    pc.id = PathClassId::III;
  } else {
    pc.id = PathClassId::II;
  }
  using B = StateBlock;
  switch (pc.id) {
    case PathClassId::I:
      vital_ids = "G";
      pc.sequence = {B::GT_TOP, B::GT_MID, B::GT_BOT, B::LT_BOT};
      break;
    case PathClassId::II:
      vital_ids = "ADG";
      pc.sequence = {B::GT_TOP, B::LT_TOP, B::LT_MID, B::GT_MID, B::GT_BOT, B::LT_BOT};
      break;
    case PathClassId::III:
      vital_ids = "AF";
      pc.sequence = {B::GT_TOP, B::LT_TOP, B::LT_MID, B::LT_BOT};
      break;
  }
  for (char id : vital_ids) {
    double v = pc.transitions.at(id);
    if (v > tol && v <= s.total + tol) pc.vital.push_back(v);
  }
  std::sort(pc.vital.begin(), pc.vital.end(), std::greater<>());
  return pc;
}

std::vector<double> vital_critical_values(const SortedArm& arm) { return path_class(arm).vital; }

std::string BlockState::label() const {
  if (at_transition) return "T_" + letters;
  return to_string(block);
}

const char* to_string(Connectivity c) {
  switch (c) {
    case Connectivity::One: return "One";
    case Connectivity::Two: return "Two";
    case Connectivity::Critical: return "Critical";
    case Connectivity::Infeasible: return "Infeasible";
  }
  return "?";
}

const char* to_string(StateBlock b) {
  switch (b) {
    case StateBlock::GT_TOP: return "GT_TOP";
    case StateBlock::LT_TOP: return "LT_TOP";
    case StateBlock::GT_MID: return "GT_MID";
    case StateBlock::LT_MID: return "LT_MID";
    case StateBlock::GT_BOT: return "GT_BOT";
    case StateBlock::LT_BOT: return "LT_BOT";
  }
  return "?";
}

const char* to_string(PathClassId c) {
  switch (c) {
    case PathClassId::I: return "I";
    case PathClassId::II: return "II";
    case PathClassId::III: return "III";
  }
  return "?";
}

}  // namespace armkin

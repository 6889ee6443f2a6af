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

#include <map>
#include <optional>
#include <vector>

#include "armkin/arm_core.hpp"
#include "armkin/ik_engine.hpp"
#include "armkin/reach.hpp"
#include "armkin/topology.hpp"

namespace armkin {

// Two IKs sharing one set of IKCFs; they differ only in their sign assignments.
struct IKPlan {
  SortedArm arm;
  PathClass path;
  IkTuples sg;
  IkTuples sg_hat;
  // Chain values x_p at each reachable vital critical value, keyed by transition letter.
  std::map<char, std::vector<double>> critical_chains;
};

IKPlan design_pair(const SortedArm& arm);

struct RestrictedSolution {
  ConnectivityReport connectivity;
  double z = 0.0;       // requested base length
  double z_eval = 0.0;  // snapped to the vital value when Critical
  Configuration ik1;    // sg output
  Configuration ik2;    // sg_hat output
  std::vector<Configuration> configs;  // one per component, sorted-arm order
};

class UnreachableError : public ValidationError {
 public:
  UnreachableError(const std::string& what, ReachInterval r) : ValidationError(what), reach(r) {}
  ReachInterval reach;
};

RestrictedSolution solve_restricted(const IKPlan& plan, double z);
RestrictedSolution solve_restricted(const SortedArm& arm, double z);

struct Solution {
  SortedArm arm;
  double z = 0.0;
  double rho = 0.0;
  ReachInterval reach;
  bool reachable = false;
  std::optional<RestrictedSolution> restricted;
  std::vector<Configuration> configs;  // user order, rotated onto the target
};

Solution solve(const ArmSpec& spec, const EndEffectorTarget& target);

struct SweepRow {
  double z = 0.0;
  Connectivity connectivity = Connectivity::One;
  BlockState block;
  Configuration ik1;  // user order, end effector on +X
  Configuration ik2;
};

std::vector<SweepRow> sweep(const ArmSpec& spec, double z_from, double z_to, int steps);

}  // namespace armkin

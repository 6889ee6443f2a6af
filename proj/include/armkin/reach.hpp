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

#include <vector>

#include "armkin/arm_core.hpp"  // ValidationError

namespace armkin {

// Attainable base-to-end-effector distances of a chain: 0 <= lo <= hi = sum.
struct ReachInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double z, double tol = 0.0) const { return z >= lo - tol && z <= hi + tol; }
};

ReachInterval reach_closed(const std::vector<double>& lengths);

// Input is outermost-first (l_0, l_1, ...); entry p is the reach of l_0..l_p.
std::vector<ReachInterval> reach_recursive(const std::vector<double>& lengths_outer_first);

}  // namespace armkin

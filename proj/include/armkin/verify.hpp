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

#include "armkin/arm_core.hpp"
#include "armkin/ik_design.hpp"

namespace armkin {

enum class Verdict { Same, Different, Inconclusive };

const char* to_string(Verdict v);

// psi: signed angle from the second-longest to the third-longest side of the
// closed polygon {segments, closing chord}.
struct ComponentCertificate {
  Verdict verdict = Verdict::Inconclusive;
  double psi_a = 0.0;
  double psi_b = 0.0;
};

ComponentCertificate component_certificate(const ArmSpec& spec, double z, const Configuration& a,
                                            const Configuration& b);

// Grid oracle for the number of connected components at base length z (n <= 5).
int brute_force_components(const ArmSpec& spec, double z, int resolution);

struct ContinuityReport {
  double max_step = 0.0;       // torus max-norm, over both IKs
  double max_step_ik1 = 0.0;
  double max_step_ik2 = 0.0;
  double refinement_ratio = 0.0;  // coarse max_step / refined max_step; 0 when not computed
  std::vector<double> jump_locations;  // z where a step reaches the jump threshold
};

ContinuityReport continuity_report(const std::vector<SweepRow>& rows, double jump_threshold = 0.5);
ContinuityReport continuity_report(const std::vector<SweepRow>& rows, const std::vector<SweepRow>& refined,
                                   double jump_threshold = 0.5);

double torus_distance(const Configuration& a, const Configuration& b);

}  // namespace armkin

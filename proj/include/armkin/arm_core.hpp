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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace armkin {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Segment lengths in user order, base segment first.
struct ArmSpec {
  std::vector<double> lengths;

  explicit ArmSpec(std::vector<double> l);
  std::size_t size() const { return lengths.size(); }
  double total() const;
};

// Descending lengths (base first) plus sigma: sorted index -> original index.
struct SortedArm {
  std::vector<double> lengths;
  std::vector<std::size_t> perm;
  std::vector<double> original;

  std::size_t size() const { return lengths.size(); }
  double total() const;
};

// Absolute segment orientations in (-pi, pi], one per segment.
struct Configuration {
  std::vector<double> angles;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct EndEffectorTarget {
  double qx = 0.0;
  double qy = 0.0;

  EndEffectorTarget(double x, double y);
  double z() const;
  double rho() const;
};

// Maps any angle to (-pi, pi]; -pi becomes pi.
double canonical_angle(double a);

// Shortest signed difference b - a on the circle, in (-pi, pi].
double angle_diff(double a, double b);

SortedArm normalize_arm(const ArmSpec& spec);

Point forward_kinematics(const std::vector<double>& lengths, const Configuration& cfg);
Point forward_kinematics(const ArmSpec& spec, const Configuration& cfg);

double base_length(const std::vector<double>& lengths, const Configuration& cfg);
double base_length(const ArmSpec& spec, const Configuration& cfg);

// out[i] = cfg[sigma[i]].
Configuration permute_configuration(const Configuration& cfg, const std::vector<std::size_t>& sigma);
std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& sigma);

// Rotates a configuration whose end effector lies on +X by rho.
Configuration lift_rotation(const std::vector<double>& lengths, const Configuration& cfg, double rho);

}  // namespace armkin

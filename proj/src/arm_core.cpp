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

#include "armkin/arm_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace armkin {

namespace {

constexpr double kPi = std::numbers::pi;

void check_lengths(const std::vector<double>& l) {
  if (l.size() < 2) throw ValidationError("arm needs at least 2 segments");
  for (double v : l) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("segment lengths must be finite and > 0");
  }
}

}  // namespace

ArmSpec::ArmSpec(std::vector<double> l) : lengths(std::move(l)) { check_lengths(lengths); }

double ArmSpec::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0.0); }

double SortedArm::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0.0); }

EndEffectorTarget::EndEffectorTarget(double x, double y) : qx(x), qy(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw ValidationError("target must be finite");
  if (x == 0.0 && y == 0.0) throw ValidationError("target coincides with the base");
}

double EndEffectorTarget::z() const { return std::hypot(qx, qy); }

double EndEffectorTarget::rho() const { return std::atan2(qy, qx); }

double canonical_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  if (r == 0.0) r = 0.0;  // drop negative zero
  return r;
}

double angle_diff(double a, double b) { return canonical_angle(b - a); }

SortedArm normalize_arm(const ArmSpec& spec) {
  check_lengths(spec.lengths);
  SortedArm out;
  out.original = spec.lengths;
  out.perm.resize(spec.size());
  std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});
  std::stable_sort(out.perm.begin(), out.perm.end(),
                   [&](std::size_t a, std::size_t b) { return spec.lengths[a] > spec.lengths[b]; });
  out.lengths.reserve(spec.size());
  for (std::size_t i : out.perm) out.lengths.push_back(spec.lengths[i]);
  return out;
}

Point forward_kinematics(const std::vector<double>& lengths, const Configuration& cfg) {
  if (lengths.size() != cfg.angles.size()) throw ValidationError("configuration size does not match arm");
  Point p;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    p.x += lengths[j] * std::cos(cfg.angles[j]);
    p.y += lengths[j] * std::sin(cfg.angles[j]);
  }
  return p;
}

Point forward_kinematics(const ArmSpec& spec, const Configuration& cfg) {
  return forward_kinematics(spec.lengths, cfg);
}

double base_length(const std::vector<double>& lengths, const Configuration& cfg) {
  Point p = forward_kinematics(lengths, cfg);
  return std::hypot(p.x, p.y);
}

double base_length(const ArmSpec& spec, const Configuration& cfg) { return base_length(spec.lengths, cfg); }

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> inv(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= sigma.size() || inv[sigma[i]] != sigma.size()) throw ValidationError("permutation is not a bijection");
    inv[sigma[i]] = i;
  }
  return inv;
}

Configuration permute_configuration(const Configuration& cfg, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != cfg.angles.size()) throw ValidationError("permutation size does not match configuration");
  invert_permutation(sigma);  // bijectivity check
  Configuration out;
  out.angles.reserve(sigma.size());
  for (std::size_t i : sigma) out.angles.push_back(cfg.angles[i]);
  return out;
}

Configuration lift_rotation(const std::vector<double>& lengths, const Configuration& cfg, double rho) {
  Point p = forward_kinematics(lengths, cfg);
  double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  if (std::abs(p.y) > 1e-9 * total || p.x < -1e-9 * total) {
    throw ValidationError("configuration end effector is not on the positive X axis");
  }
  Configuration out = cfg;
  for (double& a : out.angles) a = canonical_angle(a + rho);
  return out;
}

}  // namespace armkin

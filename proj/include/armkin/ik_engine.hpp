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

#include <stdexcept>
#include <vector>

#include "armkin/arm_core.hpp"

// Indexing in this header follows the chain convention: level p = 0 is the
// outermost segment, level m-1 the base. x_p is the distance from the base of
// segment p to the end effector, so x_{m-1} = z and x_0 = l_0.

namespace armkin {

enum class Sign { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// theta: at the base of segment p, between l_p and chord x_p.
// phi: at the end effector, between chords x_p and x_{p-1}.
struct TriangleAngles {
  double theta = 0.0;
  double phi = 0.0;
};

TriangleAngles triangle_angles(Sign s, double l, double x_p, double x_prev);

// Thrown when a chain value leaves the positive reals; means the IKCF set is defective.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class IkcfKind { Min, Max, Step, Const };

// f_{p-1}: maps x_p in [lo, hi] to x_{p-1} in [lo_prev, hi_prev].
struct Ikcf {
  IkcfKind kind = IkcfKind::Max;
  double l = 0.0;  // l_p
  double lo_prev = 0.0, hi_prev = 0.0;
  double lo = 0.0, hi = 0.0;
  double x1 = 0.0, x2 = 0.0;  // Step blend window
  double value = 0.0;         // Const output
  double tol = 0.0;           // domain slack
};

double eval_ikcf(const Ikcf& f, double x_p);

// Chain: evaluated on x_p (the interval sign function proper).
// Base: evaluated on z = x_{m-1}; lets a level switch on a base-length window.
enum class SwitchKey { Chain, Base };

// Switch points ascending, last one is the domain top; sg[i] covers [xi[i-1], xi[i]).
struct SignFunction {
  std::vector<double> xi;
  std::vector<Sign> sg;
  SwitchKey key = SwitchKey::Chain;
  double lo = 0.0, hi = 0.0;
  double tol = 0.0;
};

Sign interval_sign(const SignFunction& s, double x);

// Per level p = 1..m-1: f[p] is f_{p-1}, sign[p] drives the level-p triangle. Index 0 unused.
struct IkTuples {
  std::vector<double> l;  // outermost first
  std::vector<Ikcf> f;
  std::vector<SignFunction> sign;
  double tol = 0.0;
};

struct IkTrace {
  std::vector<double> x;  // chain values, x[p]
  std::vector<Sign> s;    // level signs, s[0] unused
  std::vector<TriangleAngles> tri;
  Configuration cfg;      // base-first order
};

IkTrace evaluate_ik_trace(const IkTuples& t, double z);
Configuration evaluate_ik(const IkTuples& t, double z);

}  // namespace armkin

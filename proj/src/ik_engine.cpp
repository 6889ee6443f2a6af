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

#include "armkin/ik_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace armkin {

namespace {

constexpr double kPi = std::numbers::pi;

// Residual (relative to the perimeter) below which a triangle is treated as collinear.
constexpr double kCollinearRel = 1e-13;

// Angle between sides a and b, opposite c. Kahan's form stays accurate for needles.
double angle_opposite(double c, double a, double b) {
  if (a < b) std::swap(a, b);
  double mu = (b >= c) ? c - (a - b) : b - (a - c);
  double num = ((a - b) + c) * mu;
  double den = (a + (b + c)) * ((a - c) + b);
  if (num <= 0.0) return 0.0;
  if (den <= 0.0) return kPi;
  return 2.0 * std::atan(std::sqrt(num / den));
}

}  // namespace

TriangleAngles triangle_angles(Sign s, double l, double x_p, double x_prev) {
  if (!(l > 0.0) || !(x_p > 0.0) || !(x_prev > 0.0)) {
    throw ValidationError("triangle sides must be > 0");
  }
  double perimeter = l + x_p + x_prev;
  double r_stretch = x_prev + l - x_p;  // x_p longest
  double r_back = x_p + l - x_prev;     // x_prev longest
  double r_over = x_p + x_prev - l;     // l longest
  double slack = 1e-9 * perimeter;
  if (r_stretch < -slack || r_back < -slack || r_over < -slack) {
    throw ValidationError("triangle inequality violated");
  }
  TriangleAngles a;
  double snap = kCollinearRel * perimeter;
  double rmin = std::min({r_stretch, r_back, r_over});
  if (rmin <= snap) {
    if (rmin == r_stretch) {
      a = {0.0, 0.0};
    } else if (rmin == r_back) {
      a = {kPi, 0.0};
    } else {
      a = {0.0, kPi};
    }
  } else {
    a.theta = angle_opposite(x_prev, l, x_p);
    a.phi = angle_opposite(l, x_p, x_prev);
  }
  if (s == Sign::Minus) {
    a.theta = canonical_angle(-a.theta);
    a.phi = canonical_angle(-a.phi);
  }
  return a;
}

double eval_ikcf(const Ikcf& f, double x) {
  if (x < f.lo - f.tol || x > f.hi + f.tol) throw ValidationError("IKCF argument outside its domain");
  auto min_fn = [&] { return std::max(f.lo_prev, std::abs(x - f.l)); };
  auto max_fn = [&] { return std::min(f.hi_prev, x + f.l); };
  switch (f.kind) {
    case IkcfKind::Min:
      return min_fn();
    case IkcfKind::Max:
      return max_fn();
    case IkcfKind::Const:
      return f.value;
    case IkcfKind::Step:
      if (x <= f.x1) return max_fn();
      if (x >= f.x2) return min_fn();
      return ((f.x2 - x) * max_fn() + (x - f.x1) * min_fn()) / (f.x2 - f.x1);
  }
  return f.value;
}

Sign interval_sign(const SignFunction& s, double x) {
  if (s.xi.empty() || s.xi.size() != s.sg.size()) throw ValidationError("malformed switch set");
  if (x < s.lo - s.tol || x > s.hi + s.tol) throw ValidationError("sign function argument outside its domain");
  for (std::size_t i = 0; i < s.xi.size(); ++i) {
    if (x < s.xi[i]) return s.sg[i];
  }
  return s.sg.back();
}

IkTrace evaluate_ik_trace(const IkTuples& t, double z) {
  const std::size_t m = t.l.size();
  if (m < 2 || t.f.size() != m || t.sign.size() != m) throw ValidationError("IK tuples do not match the arm");
  if (!(z > 0.0)) throw ValidationError("base length must be > 0");
  const Ikcf& top = t.f[m - 1];
  if (z < top.lo - t.tol || z > top.hi + t.tol) throw ValidationError("base length outside the reach interval");

  IkTrace tr;
  tr.x.assign(m, 0.0);
  tr.s.assign(m, Sign::Plus);
  tr.tri.assign(m, TriangleAngles{});
  tr.x[m - 1] = z;
  for (std::size_t p = m - 1; p >= 1; --p) {
    double next = eval_ikcf(t.f[p], tr.x[p]);
    if (!(next > 0.0)) throw ConstructionError("chain value reached zero");
    tr.x[p - 1] = next;
  }
  for (std::size_t p = 1; p < m; ++p) {
    const SignFunction& sf = t.sign[p];
    tr.s[p] = interval_sign(sf, sf.key == SwitchKey::Base ? z : tr.x[p]);
    tr.tri[p] = triangle_angles(tr.s[p], t.l[p], tr.x[p], tr.x[p - 1]);
  }

  // theta_q = Theta_q - sum_{k>q} Phi_k, summed afresh for every q.
  tr.cfg.angles.assign(m, 0.0);
  for (std::size_t q = 0; q < m; ++q) {
    double acc = (q == 0) ? 0.0 : tr.tri[q].theta;
    for (std::size_t k = q + 1; k < m; ++k) acc -= tr.tri[k].phi;
    tr.cfg.angles[m - 1 - q] = canonical_angle(acc);
  }
  return tr;
}

Configuration evaluate_ik(const IkTuples& t, double z) { return evaluate_ik_trace(t, z).cfg; }

}  // namespace armkin

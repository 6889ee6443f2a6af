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

#include "armkin/ik_design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace armkin {

namespace {

using S = Sign;

struct Builder {
  std::vector<double> l;  // outermost first
  std::vector<ReachInterval> reach;
  double tol = 0.0;

  Ikcf make(IkcfKind kind, std::size_t p) const {
    Ikcf f;
    f.kind = kind;
    f.l = l[p];
    f.lo_prev = reach[p - 1].lo;
    f.hi_prev = reach[p - 1].hi;
    f.lo = reach[p].lo;
    f.hi = reach[p].hi;
    f.tol = tol;
    if (kind == IkcfKind::Const) f.value = l[0];
    return f;
  }

  SignFunction plus(std::size_t p) const { return sign(p, SwitchKey::Chain, {reach[p].hi}, {S::Plus}); }

  SignFunction sign(std::size_t p, SwitchKey key, std::vector<double> xi, std::vector<Sign> sg) const {
    SignFunction s;
    std::size_t dom = key == SwitchKey::Base ? l.size() - 1 : p;
    s.lo = reach[dom].lo;
    s.hi = reach[dom].hi;
    s.xi = std::move(xi);
    s.sg = std::move(sg);
    s.key = key;
    s.tol = tol;
    return s;
  }
};

}  // namespace

IKPlan design_pair(const SortedArm& arm) {
  IKPlan plan;
  plan.arm = arm;
  plan.path = path_class(arm);
  const std::size_t m = arm.size();
  const ArmSums s = arm_sums(arm);
  const TransitionValues& tv = plan.path.transitions;
  const double zA = tv.at('A'), zD = tv.at('D'), zF = tv.at('F'), zG = tv.at('G');

  Builder b;
  b.l.assign(arm.lengths.rbegin(), arm.lengths.rend());
  b.reach = reach_recursive(b.l);
  b.tol = critical_tolerance(arm, 0.0);
  const double hi_top = b.reach[m - 1].hi;

  std::vector<Ikcf> f(m);
  std::vector<SignFunction> sg(m), hat(m);
  f[1] = b.make(IkcfKind::Const, 1);
  for (std::size_t p = 2; p < m; ++p) f[p] = b.make(IkcfKind::Max, p);
  for (std::size_t p = 1; p < m; ++p) sg[p] = hat[p] = b.plus(p);

  const std::size_t top = m - 1;  // base level
  switch (plan.path.id) {
    case PathClassId::I: {
      if (top - 1 >= 2) f[top - 1] = b.make(zG > 0.0 ? IkcfKind::Min : IkcfKind::Max, top - 1);
      // An unreachable G leaves the space connected throughout; the pair then coincides.
      if (tv.entry('G').reachable) {
        double xg = zG + s.l1;
        sg[top - 1] = b.sign(top - 1, SwitchKey::Chain, {xg, b.reach[top - 1].hi}, {S::Plus, S::Plus});
        hat[top - 1] = b.sign(top - 1, SwitchKey::Chain, {xg, b.reach[top - 1].hi}, {S::Minus, S::Plus});
      }
      break;
    }
    case PathClassId::II: {
      f[top] = b.make(IkcfKind::Step, top);
      f[top].x1 = zG;
      f[top].x2 = zD;
      if (top - 1 >= 2) f[top - 1] = b.make(zG > 0.0 ? IkcfKind::Min : IkcfKind::Max, top - 1);
      sg[top] = b.sign(top, SwitchKey::Chain, {zD, zA, hi_top}, {S::Plus, S::Plus, S::Plus});
      hat[top] = b.sign(top, SwitchKey::Chain, {zD, zA, hi_top}, {S::Plus, S::Minus, S::Plus});
      if (tv.entry('G').reachable) {
        sg[top - 1] = b.sign(top - 1, SwitchKey::Base, {zG, hi_top}, {S::Plus, S::Plus});
        hat[top - 1] = b.sign(top - 1, SwitchKey::Base, {zG, hi_top}, {S::Minus, S::Plus});
      }
      break;
    }
    case PathClassId::III: {
      if (top >= 2) f[top] = b.make(IkcfKind::Min, top);
      sg[top] = b.sign(top, SwitchKey::Chain, {zF, zA, hi_top}, {S::Plus, S::Plus, S::Plus});
      hat[top] = b.sign(top, SwitchKey::Chain, {zF, zA, hi_top}, {S::Plus, S::Minus, S::Plus});
      if (top >= 2) {
        sg[top - 1] = b.sign(top - 1, SwitchKey::Base, {zF, hi_top}, {S::Plus, S::Plus});
        hat[top - 1] = b.sign(top - 1, SwitchKey::Base, {zF, hi_top}, {S::Minus, S::Plus});
      }
      break;
    }
  }

  plan.sg = IkTuples{b.l, f, sg, b.tol};
  plan.sg_hat = IkTuples{b.l, f, hat, b.tol};

  std::string letters = plan.path.id == PathClassId::I ? "G" : plan.path.id == PathClassId::II ? "ADG" : "AF";
  for (char c : letters) {
    const TransitionValue& t = tv.entry(c);
    if (t.reachable) plan.critical_chains[c] = evaluate_ik_trace(plan.sg, t.z).x;
  }
  return plan;
}

RestrictedSolution solve_restricted(const IKPlan& plan, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw ValidationError("base length must be > 0");
  RestrictedSolution r;
  r.z = z;
  r.connectivity = classify_connectivity(plan.arm, z);
  ReachInterval reach = reach_closed(plan.arm.lengths);
  if (r.connectivity.variant == Connectivity::Infeasible) throw UnreachableError("base length outside the reach interval", reach);

  r.z_eval = std::clamp(z, reach.lo, reach.hi);
  if (r.connectivity.variant == Connectivity::Critical) {
    double tol = critical_tolerance(plan.arm, z);
    for (double v : plan.path.vital) {
      if (std::abs(v - z) <= tol) r.z_eval = v;
    }
  }
  r.ik1 = evaluate_ik(plan.sg, r.z_eval);
  r.ik2 = evaluate_ik(plan.sg_hat, r.z_eval);
  r.configs.push_back(r.ik1);
  if (r.connectivity.variant == Connectivity::Two) r.configs.push_back(r.ik2);
  return r;
}

RestrictedSolution solve_restricted(const SortedArm& arm, double z) { return solve_restricted(design_pair(arm), z); }

Solution solve(const ArmSpec& spec, const EndEffectorTarget& target) {
  Solution out;
  out.arm = normalize_arm(spec);
  out.z = target.z();
  out.rho = target.rho();
  out.reach = reach_closed(spec.lengths);
  double tol = critical_tolerance(out.arm, out.z);
  out.reachable = out.reach.contains(out.z, tol);
  if (!out.reachable) return out;

  out.restricted = solve_restricted(design_pair(out.arm), out.z);
  std::vector<std::size_t> inv = invert_permutation(out.arm.perm);
  for (const Configuration& c : out.restricted->configs) {
    out.configs.push_back(lift_rotation(spec.lengths, permute_configuration(c, inv), out.rho));
  }
  return out;
}

std::vector<SweepRow> sweep(const ArmSpec& spec, double z_from, double z_to, int steps) {
  if (steps < 2) throw ValidationError("sweep needs at least 2 steps");
  if (!(z_from > 0.0) || !(z_to > 0.0)) throw ValidationError("sweep bounds must be > 0");
  if (z_from == z_to) throw ValidationError("sweep bounds must differ");
  SortedArm arm = normalize_arm(spec);
  ReachInterval reach = reach_closed(arm.lengths);
  double tol = critical_tolerance(arm, std::max(z_from, z_to));
  if (!reach.contains(z_from, tol) || !reach.contains(z_to, tol)) throw ValidationError("sweep bounds outside the reach interval");

  IKPlan plan = design_pair(arm);
  std::vector<std::size_t> inv = invert_permutation(arm.perm);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    double z = z_from + (z_to - z_from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    if (i == steps - 1) z = z_to;
    RestrictedSolution r = solve_restricted(plan, z);
    SweepRow row;
    row.z = z;
    row.connectivity = r.connectivity.variant;
    row.block = state_block(arm, std::clamp(z, reach.lo, reach.hi));
    row.ik1 = permute_configuration(r.ik1, inv);
    row.ik2 = permute_configuration(r.ik2, inv);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace armkin

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

#include "armkin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "armkin/topology.hpp"

namespace armkin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPsiTol = 1e-9;

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Orientation of the polygon sides: segments in order, then the chord from
// the end effector back to the base.
std::vector<double> side_orientations(const std::vector<double>& lengths, const Configuration& c) {
  std::vector<double> o = c.angles;
  Point e = forward_kinematics(lengths, c);
  o.push_back(std::atan2(-e.y, -e.x));
  return o;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Same: return "Same";
    case Verdict::Different: return "Different";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

double torus_distance(const Configuration& a, const Configuration& b) {
  if (a.angles.size() != b.angles.size()) throw ValidationError("configuration sizes differ");
  double d = 0.0;
  for (std::size_t i = 0; i < a.angles.size(); ++i) d = std::max(d, std::abs(angle_diff(a.angles[i], b.angles[i])));
  return d;
}

ComponentCertificate component_certificate(const ArmSpec& spec, double z, const Configuration& a,
                                            const Configuration& b) {
  const std::vector<double>& l = spec.lengths;
  double tol = 1e-9 * (spec.total() + z);
  if (std::abs(base_length(l, a) - z) > tol || std::abs(base_length(l, b) - z) > tol) {
    throw ValidationError("configuration base length does not match z");
  }
  std::vector<double> len = l;
  len.push_back(z);
  std::vector<std::size_t> rank(len.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t i, std::size_t j) { return len[i] > len[j]; });
  const std::size_t s2 = rank[1], s3 = rank[2];

  std::vector<double> oa = side_orientations(l, a), ob = side_orientations(l, b);
  ComponentCertificate c;
  c.psi_a = angle_diff(oa[s2], oa[s3]);
  c.psi_b = angle_diff(ob[s2], ob[s3]);

  if (torus_distance(a, b) <= 1e-9) {
    c.verdict = Verdict::Same;
    return c;
  }
  Connectivity conn = classify_connectivity(normalize_arm(spec), z).variant;
  auto degenerate = [](double psi) { return std::abs(psi) <= kPsiTol || std::abs(psi) >= kPi - kPsiTol; };
  if (conn != Connectivity::Two || degenerate(c.psi_a) || degenerate(c.psi_b)) {
    c.verdict = Verdict::Inconclusive;
  } else {
    c.verdict = (c.psi_a > 0.0) != (c.psi_b > 0.0) ? Verdict::Different : Verdict::Same;
  }
  return c;
}

namespace {

// Angle between sides a and b of a triangle, opposite c, from Kahan's area.
// A folded or stretched triangle gives exactly 0 or pi, so mirrored corners
// coincide there instead of differing by amplified rounding.
double corner_angle(double a, double b, double c) {
  double s[] = {a, b, c};
  std::sort(s, s + 3, std::greater<>());
  double q = (s[0] + (s[1] + s[2])) * (s[2] - (s[0] - s[1])) * (s[2] + (s[0] - s[1])) * (s[0] + (s[1] - s[2]));
  double area4 = std::sqrt(std::max(0.0, q));
  return std::atan2(area4, a * a + b * b - c * c);
}

}  // namespace

int brute_force_components(const ArmSpec& spec, double z, int resolution) {
  const std::size_t n = spec.size();
  if (n > 5) throw ValidationError("oracle supports at most 5 segments");
  if (resolution < 16) throw ValidationError("oracle resolution must be >= 16");
  if (!(z > 0.0)) throw ValidationError("base length must be > 0");

  // Chain indexing: l[p], p = 0 outermost; reach of l_0..l_p by the closed form.
  std::vector<double> l(spec.lengths.rbegin(), spec.lengths.rend());
  std::vector<double> lo(n), hi(n);
  double sum = 0.0, lmax = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    sum += l[p];
    lmax = std::max(lmax, l[p]);
    hi[p] = sum;
    lo[p] = std::max(0.0, 2.0 * lmax - sum);
  }
  double scale = sum + z;
  if (z < lo[n - 1] - 1e-12 * scale || z > hi[n - 1] + 1e-12 * scale) {
    throw ValidationError("base length outside the reach interval");
  }

  // Free chain values x_{n-2}..x_1, each parametrised by t in [0,1] between its
  // bounds given the next-outer value. For a fixed sign vector the map from the
  // t-cube to configurations is continuous, and t = 0, 1 land exactly on the
  // faces where a level triangle degenerates, the only places a sign flip can
  // leave the configuration unchanged.
  const std::size_t dims = n - 2;
  const std::size_t side = static_cast<std::size_t>(resolution) + 1;
  std::size_t points = 1;
  for (std::size_t d = 0; d < dims; ++d) points *= side;
  const std::size_t signs = std::size_t{1} << (n - 1);
  constexpr double kFlipTol = 1e-6;  // rad; coincidence up to rounding

  std::vector<char> valid(points, 0);
  std::vector<double> x(n), cfg(signs * n);
  std::vector<std::size_t> idx(dims, 0), stride(dims, 1);
  for (std::size_t d = 1; d < dims; ++d) stride[d] = stride[d - 1] * side;
  DisjointSets ds(points * signs);
  auto node = [&](std::size_t g, std::size_t sv) { return g * signs + sv; };

  for (std::size_t g = 0; g < points; ++g) {
    std::size_t rem = g;
    for (std::size_t d = 0; d < dims; ++d) {
      idx[d] = rem % side;
      rem /= side;
    }
    x[n - 1] = z;
    std::size_t zero_level = 0;  // innermost k with x_k at zero, 0 if none
    for (std::size_t d = dims; d-- > 0;) {
      std::size_t k = d + 1;
      double lower = std::max(lo[k], std::abs(x[k + 1] - l[k + 1]));
      double upper = std::max(lower, std::min(hi[k], x[k + 1] + l[k + 1]));
      double t = static_cast<double>(idx[d]) / static_cast<double>(resolution);
      // Values of x_k where the next-inner bounds switch regime; the nearest grid
      // point snaps onto each so thin degenerate faces are not stepped over.
      if (upper > lower) {
        const double breaks[] = {l[k] - lo[k - 1], l[k] + lo[k - 1], hi[k - 1] - l[k]};
        for (double b : breaks) {
          double tb = (b - lower) / (upper - lower);
          if (!(tb > 0.0 && tb < 1.0)) continue;
          double snapped = std::round(tb * resolution);
          if (snapped >= 1.0 && snapped <= resolution - 1.0 && static_cast<std::size_t>(snapped) == idx[d]) t = tb;
        }
      }
      x[k] = lower + t * (upper - lower);
      if (x[k] <= 1e-12 * scale) zero_level = k;
    }
    x[0] = l[0];
    if (zero_level > 1) continue;
    valid[g] = 1;
    if (zero_level == 1) {
      // x_1 = 0 needs l_0 = l_1: the two outer segments fold onto the end
      // effector and spin freely, a circle holding the limits of both outer
      // signs. The level-2 triangle is degenerate there as well.
      for (std::size_t sv = 0; sv < signs; ++sv) {
        ds.unite(node(g, sv), node(g, sv ^ 1U));
        ds.unite(node(g, sv), node(g, sv ^ 2U));
      }
      continue;
    }

    for (std::size_t sv = 0; sv < signs; ++sv) {
      // Walk from the base: the far end of segment p is a circle intersection.
      double px = 0.0, py = 0.0;
      double* out = &cfg[sv * n];
      for (std::size_t p = n - 1; p >= 1; --p) {
        double dir = std::atan2(-py, z - px);
        double phi = corner_angle(l[p], x[p], x[p - 1]);
        if ((sv >> (p - 1)) & 1U) phi = -phi;
        double qx = px + l[p] * std::cos(dir + phi);
        double qy = py + l[p] * std::sin(dir + phi);
        out[n - 1 - p] = std::atan2(qy - py, qx - px);
        px = qx;
        py = qy;
      }
      out[n - 1] = std::atan2(-py, z - px);
    }
    for (std::size_t sv = 0; sv < signs; ++sv) {
      for (std::size_t bit = 0; bit + 1 < n; ++bit) {
        std::size_t w = sv ^ (std::size_t{1} << bit);
        if (w < sv) continue;
        double dist = 0.0;
        for (std::size_t j = 0; j < n; ++j) dist = std::max(dist, std::abs(angle_diff(cfg[sv * n + j], cfg[w * n + j])));
        if (dist <= kFlipTol) ds.unite(node(g, sv), node(g, w));
      }
    }
  }

  // Same-sign grid neighbours are joined by the continuous t-path between them.
  for (std::size_t g = 0; g < points; ++g) {
    if (!valid[g]) continue;
    for (std::size_t d = 0; d < dims; ++d) {
      std::size_t coord = (g / stride[d]) % side;
      if (coord + 1 >= side || !valid[g + stride[d]]) continue;
      for (std::size_t sv = 0; sv < signs; ++sv) ds.unite(node(g, sv), node(g + stride[d], sv));
    }
  }

  std::vector<char> root(points * signs, 0);
  int count = 0;
  for (std::size_t g = 0; g < points; ++g) {
    if (!valid[g]) continue;
    for (std::size_t sv = 0; sv < signs; ++sv) {
      std::size_t r = ds.find(node(g, sv));
      if (!root[r]) {
        root[r] = 1;
        ++count;
      }
    }
  }
  return count;
}

ContinuityReport continuity_report(const std::vector<SweepRow>& rows, double jump_threshold) {
  if (rows.size() < 3) throw ValidationError("continuity report needs at least 3 rows");
  ContinuityReport r;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double s1 = torus_distance(rows[i - 1].ik1, rows[i].ik1);
    double s2 = torus_distance(rows[i - 1].ik2, rows[i].ik2);
    r.max_step_ik1 = std::max(r.max_step_ik1, s1);
    r.max_step_ik2 = std::max(r.max_step_ik2, s2);
    if (std::max(s1, s2) >= jump_threshold) r.jump_locations.push_back(0.5 * (rows[i - 1].z + rows[i].z));
  }
  r.max_step = std::max(r.max_step_ik1, r.max_step_ik2);
  return r;
}

ContinuityReport continuity_report(const std::vector<SweepRow>& rows, const std::vector<SweepRow>& refined,
                                   double jump_threshold) {
  ContinuityReport coarse = continuity_report(rows, jump_threshold);
  ContinuityReport fine = continuity_report(refined, jump_threshold);
  fine.refinement_ratio = fine.max_step > 0.0 ? coarse.max_step / fine.max_step : HUGE_VAL;
  return fine;
}

}  // namespace armkin

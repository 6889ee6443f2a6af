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

#include "armkin/service.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "armkin/ik_design.hpp"
#include "armkin/reach.hpp"
#include "armkin/server.hpp"
#include "armkin/topology.hpp"
#include "armkin/verify.hpp"

namespace armkin {

using nlohmann::json;

namespace {

json num(double v) { return round12(v); }

json num_array(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

json reach_json(const ReachInterval& r) { return json::array({num(r.lo), num(r.hi)}); }

json transitions_json(const TransitionValues& tv) {
  json t = json::object();
  for (const TransitionValue& e : tv.entries) {
    t[std::string(1, e.id)] = {{"z", num(e.z)}, {"reachable", e.reachable}, {"applicable", e.applicable}};
  }
  return t;
}

json arm_header(const ArmSpec& spec, const SortedArm& arm) {
  json sigma = json::array();
  for (std::size_t i : arm.perm) sigma.push_back(i);
  return {{"v", 1}, {"lengths", num_array(spec.lengths)}, {"sorted", num_array(arm.lengths)}, {"sigma", sigma}};
}

const std::string& require(const QueryParams& q, const std::string& key) {
  auto it = q.find(key);
  if (it == q.end()) throw ValidationError("missing query parameter '" + key + "'");
  return it->second;
}

HttpResult bad_request(const std::string& what) { return {400, {{"v", 1}, {"error", "bad_request"}, {"message", what}}}; }

template <typename Fn>
HttpResult guarded(Fn fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    return bad_request(e.what());
  }
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

double parse_number(const std::string& text) {
  if (text.empty()) throw ValidationError("empty number");
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ValidationError("malformed number '" + text + "'");
  }
  return v;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json info_json(const ArmSpec& spec) {
  SortedArm arm = normalize_arm(spec);
  PathClass pc = path_class(arm);
  json j = arm_header(spec, arm);
  j["sigma_total"] = num(arm.total());
  j["reach"] = reach_json(reach_closed(spec.lengths));
  j["class"] = to_string(pc.id);
  j["transitions"] = transitions_json(pc.transitions);
  j["vital"] = num_array(pc.vital);
  json seq = json::array();
  for (StateBlock b : pc.sequence) seq.push_back(to_string(b));
  j["sequence"] = seq;
  return j;
}

json solve_json(const ArmSpec& spec, const EndEffectorTarget& target) {
  Solution s = solve(spec, target);
  if (!s.reachable) {
    return {{"v", 1}, {"error", "unreachable"}, {"z", num(s.z)}, {"reach", reach_json(s.reach)}};
  }
  const RestrictedSolution& r = *s.restricted;
  PathClass pc = path_class(s.arm);
  std::vector<std::size_t> inv = invert_permutation(s.arm.perm);
  Configuration a = permute_configuration(r.ik1, inv), b = permute_configuration(r.ik2, inv);
  ComponentCertificate cert = component_certificate(spec, r.z_eval, a, b);

  json j = arm_header(spec, s.arm);
  j["z"] = num(s.z);
  j["rho"] = num(s.rho);
  j["reach"] = reach_json(s.reach);
  j["connectivity"] = to_string(r.connectivity.variant);
  j["components"] = component_count(r.connectivity.variant);
  j["block"] = state_block(s.arm, r.z_eval).label();
  j["class"] = to_string(pc.id);
  j["transitions"] = transitions_json(pc.transitions);
  j["vital"] = num_array(pc.vital);
  json configs = json::array();
  for (const Configuration& c : s.configs) configs.push_back(num_array(c.angles));
  j["configurations"] = configs;
  j["agreement"] = torus_distance(r.ik1, r.ik2) <= 1e-9;
  j["certificate"] = to_string(cert.verdict);
  j["psi"] = json::array({num(cert.psi_a), num(cert.psi_b)});
  return j;
}

json presets_json() {
  struct Preset {
    const char* name;
    std::vector<double> lengths;
  };
  const Preset presets[] = {{"class-I", {3, 2.5, 2.5, 0.5}}, {"class-II", {4, 3, 2, 0.5}}, {"class-III", {2, 2, 1}}};
  json list = json::array();
  for (const Preset& p : presets) {
    SortedArm arm = normalize_arm(ArmSpec(p.lengths));
    PathClass pc = path_class(arm);
    list.push_back({{"name", p.name}, {"lengths", num_array(p.lengths)}, {"class", to_string(pc.id)},
                    {"vital", num_array(pc.vital)}});
  }
  return {{"v", 1}, {"presets", list}};
}

HttpResult handle_info(const QueryParams& q) {
  return guarded([&] { return HttpResult{200, info_json(ArmSpec(parse_number_list(require(q, "lengths"))))}; });
}

HttpResult handle_solve(const QueryParams& q) {
  return guarded([&] {
    ArmSpec spec(parse_number_list(require(q, "lengths")));
    EndEffectorTarget target(parse_number(require(q, "qx")), parse_number(require(q, "qy")));
    json body = solve_json(spec, target);
    return HttpResult{body.contains("error") ? 422 : 200, body};
  });
}

HttpResult handle_presets(const QueryParams&) { return {200, presets_json()}; }

void mount_routes(httplib::Server& server) {
  auto bind = [](HttpResult (*fn)(const QueryParams&)) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
      QueryParams q;
      for (const auto& [k, v] : req.params) {
        if (q.count(k)) {
          HttpResult dup = bad_request("repeated query parameter '" + k + "'");
          res.status = dup.status;
          res.set_content(dup.body.dump(), "application/json");
          return;
        }
        q[k] = v;
      }
      HttpResult r = fn(q);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json");
    };
  };
  server.Get("/api/arm/info", bind(&handle_info));
  server.Get("/api/arm/solve", bind(&handle_solve));
  server.Get("/api/presets", bind(&handle_presets));
}

bool run_server(const std::string& host, int port) {
  httplib::Server server;
  mount_routes(server);
  return server.listen(host, port);
}

}  // namespace armkin

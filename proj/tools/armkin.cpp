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

// armkin command line: reach, classify, solve, sweep, serve, oracle.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "armkin/ik_design.hpp"
#include "armkin/reach.hpp"
#include "armkin/service.hpp"
#include "armkin/topology.hpp"
#include "armkin/verify.hpp"

namespace {

constexpr int kExitValidation = 2;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", armkin::round12(v));
  return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<armkin::SweepRow>& rows, std::size_t n) {
  os << "z,block,components";
  for (const char* tag : {"ik1", "ik2"}) {
    for (std::size_t i = 0; i < n; ++i) os << ',' << tag << "_theta" << i;
  }
  os << '\n';
  for (const armkin::SweepRow& r : rows) {
    os << fmt(r.z) << ',' << r.block.label() << ',' << (r.connectivity == armkin::Connectivity::Two ? 2 : 1);
    for (double a : r.ik1.angles) os << ',' << fmt(a);
    for (double a : r.ik2.angles) os << ',' << fmt(a);
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar arm kinematics: reach, connectivity and paired continuous IK"};
  app.require_subcommand(1);

  std::string lengths_text, target_text, format = "json", out_path, host = "127.0.0.1";
  double z = 0.0, z_from = 0.0, z_to = 0.0;
  int steps = 0, port = 8080, resolution = 64;

  CLI::App* reach = app.add_subcommand("reach", "Print the reachable base-length interval");
  reach->add_option("--lengths", lengths_text, "Segment lengths, base first")->required();

  CLI::App* classify = app.add_subcommand("classify", "Connectivity, state block and path class at base length z");
  classify->add_option("--lengths", lengths_text, "Segment lengths, base first")->required();
  classify->add_option("--z", z, "Base length")->required();

  CLI::App* solve = app.add_subcommand("solve", "Solve for an end-effector target");
  solve->add_option("--lengths", lengths_text, "Segment lengths, base first")->required();
  solve->add_option("--target", target_text, "Target as X,Y")->required();
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sweep = app.add_subcommand("sweep", "Write a CSV sweep of both IKs over a base-length grid");
  sweep->add_option("--lengths", lengths_text, "Segment lengths, base first")->required();
  sweep->add_option("--from", z_from, "First base length")->required();
  sweep->add_option("--to", z_to, "Last base length")->required();
  sweep->add_option("--steps", steps, "Number of grid points")->required();
  sweep->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

  CLI::App* serve = app.add_subcommand("serve", "Run the JSON HTTP service");
  serve->add_option("--port", port, "Port (ARMKIN_PORT overrides)");
  serve->add_option("--host", host, "Bind address");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force component count on a grid (n <= 5)");
  oracle->add_option("--lengths", lengths_text, "Segment lengths, base first")->required();
  oracle->add_option("--z", z, "Base length")->required();
  oracle->add_option("--resolution", resolution, "Grid points per free chain value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (reach->parsed()) {
      armkin::ArmSpec spec(armkin::parse_number_list(lengths_text));
      armkin::ReachInterval r = armkin::reach_closed(spec.lengths);
      std::cout << "lo=" << fmt(r.lo) << " hi=" << fmt(r.hi) << '\n';
    } else if (classify->parsed()) {
      armkin::ArmSpec spec(armkin::parse_number_list(lengths_text));
      armkin::SortedArm arm = armkin::normalize_arm(spec);
      armkin::ConnectivityReport c = armkin::classify_connectivity(arm, z);
      if (c.variant == armkin::Connectivity::Infeasible) {
        armkin::ReachInterval r = armkin::reach_closed(spec.lengths);
        std::cout << "unreachable z=" << fmt(z) << " lo=" << fmt(r.lo) << " hi=" << fmt(r.hi) << '\n';
        return 0;
      }
      std::cout << "components=" << armkin::component_count(c.variant) << " block=" << armkin::state_block(arm, z).label()
                << " class=" << armkin::to_string(armkin::path_class(arm).id) << '\n';
    } else if (solve->parsed()) {
      armkin::ArmSpec spec(armkin::parse_number_list(lengths_text));
      std::vector<double> t = armkin::parse_number_list(target_text);
      if (t.size() != 2) throw armkin::ValidationError("target must be X,Y");
      nlohmann::json j = armkin::solve_json(spec, armkin::EndEffectorTarget(t[0], t[1]));
      if (format == "json") {
        std::cout << j.dump() << '\n';
      } else if (j.contains("error")) {
        std::cout << "error,lo,hi\nunreachable," << fmt(j["reach"][0]) << ',' << fmt(j["reach"][1]) << '\n';
      } else {
        std::cout << "component";
        for (std::size_t i = 0; i < spec.size(); ++i) std::cout << ",theta" << i;
        std::cout << '\n';
        int k = 0;
        for (const auto& cfg : j["configurations"]) {
          std::cout << ++k;
          for (const auto& a : cfg) std::cout << ',' << fmt(a.get<double>());
          std::cout << '\n';
        }
      }
    } else if (sweep->parsed()) {
      armkin::ArmSpec spec(armkin::parse_number_list(lengths_text));
      std::vector<armkin::SweepRow> rows = armkin::sweep(spec, z_from, z_to, steps);
      if (out_path.empty()) {
        write_sweep_csv(std::cout, rows, spec.size());
      } else {
        std::ofstream os(out_path);
        if (!os) {
          std::cerr << "error: cannot open " << out_path << '\n';
          return 1;
        }
        write_sweep_csv(os, rows, spec.size());
      }
    } else if (serve->parsed()) {
      if (const char* env = std::getenv("ARMKIN_PORT")) port = static_cast<int>(armkin::parse_number(env));
      if (port <= 0 || port > 65535) throw armkin::ValidationError("port out of range");
      std::cerr << "listening on " << host << ':' << port << '\n';
      if (!armkin::run_server(host, port)) {
        std::cerr << "error: cannot bind " << host << ':' << port << '\n';
        return 1;
      }
    } else if (oracle->parsed()) {
      armkin::ArmSpec spec(armkin::parse_number_list(lengths_text));
      std::cout << "components=" << armkin::brute_force_components(spec, z, resolution) << '\n';
    }
  } catch (const armkin::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}

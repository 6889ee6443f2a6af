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

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "armkin/arm_core.hpp"

namespace armkin {

// Numbers are rounded to 12 significant digits so identical requests give identical bytes.
double round12(double v);

// "3,2,1" -> {3,2,1}; rejects empty fields, trailing junk and non-finite values.
std::vector<double> parse_number_list(const std::string& text);
double parse_number(const std::string& text);

nlohmann::json info_json(const ArmSpec& spec);
nlohmann::json solve_json(const ArmSpec& spec, const EndEffectorTarget& target);
nlohmann::json presets_json();

struct HttpResult {
  int status = 200;
  nlohmann::json body;
};

using QueryParams = std::map<std::string, std::string>;

HttpResult handle_info(const QueryParams& q);
HttpResult handle_solve(const QueryParams& q);
HttpResult handle_presets(const QueryParams& q);

// Blocks until the server stops. Returns false if the port could not be bound.
bool run_server(const std::string& host, int port);

}  // namespace armkin

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

#include "armkin/reach.hpp"

#include <algorithm>
#include <numeric>


namespace armkin {

ReachInterval reach_closed(const std::vector<double>& lengths) {
  if (lengths.empty()) throw ValidationError("reach of an empty arm");
  double sum = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  double lmax = *std::max_element(lengths.begin(), lengths.end());
  return {std::max(0.0, lmax - (sum - lmax)), sum};
}

std::vector<ReachInterval> reach_recursive(const std::vector<double>& lengths_outer_first) {
  if (lengths_outer_first.empty()) throw ValidationError("reach of an empty arm");
  std::vector<ReachInterval> out;
  out.reserve(lengths_outer_first.size());
  for (double l : lengths_outer_first) {
    if (out.empty()) {
      out.push_back({l, l});
      continue;
    }
    const ReachInterval& prev = out.back();
    double lo;
    if (l <= prev.lo) {
      lo = prev.lo - l;
    } else if (l <= prev.hi) {
      lo = 0.0;
    } else {
      lo = l - prev.hi;
    }
    out.push_back({lo, prev.hi + l});
  }
  return out;
}

}  // namespace armkin

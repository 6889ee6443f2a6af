#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "arm_gen.hpp"
#include "armkin/reach.hpp"
#include "armkin/topology.hpp"

using namespace armkin;

namespace {

SortedArm sorted(std::vector<double> l) { return normalize_arm(ArmSpec(std::move(l))); }

// Independent oracle: sides {z} + lengths descending, largest + tail - second - third.
double polygon_margin(const std::vector<double>& lengths, double z) {
  std::vector<double> s = lengths;
  s.push_back(z);
  std::sort(s.begin(), s.end(), std::greater<>());
  double tail = 0.0;
  for (std::size_t i = 3; i < s.size(); ++i) tail += s[i];
  return s[0] + tail - s[1] - s[2];
}

bool is_lt(StateBlock b) {
  return b == StateBlock::LT_TOP || b == StateBlock::LT_MID || b == StateBlock::LT_BOT;
}

}  // namespace

TEST_CASE("classify_connectivity examples") {
  CHECK(polygon_margin({3, 2, 2}, 4) > 0);
  CHECK(classify_connectivity(sorted({3, 2, 2}), 4).variant == Connectivity::One);
  CHECK(polygon_margin({2, 2, 1}, 0.5) < 0);
  CHECK(classify_connectivity(sorted({2, 2, 1}), 0.5).variant == Connectivity::Two);
  CHECK(polygon_margin({2, 2, 1}, 3) == 0.0);
  CHECK(classify_connectivity(sorted({2, 2, 1}), 3).variant == Connectivity::Critical);
  CHECK(classify_connectivity(sorted({5, 1, 1}), 2).variant == Connectivity::Infeasible);
  CHECK(classify_connectivity(sorted({5, 1, 1}), 7.5).variant == Connectivity::Infeasible);
  CHECK_THROWS_AS(classify_connectivity(sorted({2, 2, 1}), 0.0), ValidationError);
  CHECK(component_count(Connectivity::Two) == 2);
  CHECK(component_count(Connectivity::One) == 1);
  CHECK(component_count(Connectivity::Critical) == 1);
  CHECK(component_count(Connectivity::Infeasible) == 0);
}

TEST_CASE("state_block examples") {
  SortedArm a = sorted({4, 3, 2, 0.5});
  CHECK(state_block(a, 5).label() == "GT_TOP");
  CHECK(state_block(a, 4.2).label() == "LT_TOP");
  CHECK(state_block(a, 0.3).label() == "LT_BOT");
  CHECK(state_block(a, 3.7).label() == "LT_MID");
  CHECK(state_block(a, 3.0).label() == "GT_MID");
  CHECK(state_block(a, 1.0).label() == "GT_BOT");
  CHECK(state_block(a, 4.5).label() == "T_A");
  CHECK(state_block(a, 4.0).label() == "T_BC");
  CHECK(state_block(a, 2.0).label() == "T_EF");
  CHECK_THROWS_AS(state_block(a, 10.0), ValidationError);
}

TEST_CASE("transition values") {
  TransitionValues t = transition_values(sorted({4, 3, 2, 0.5}));
  CHECK(t.at('A') == 4.5);
  CHECK(t.at('B') == 4.0);
  CHECK(t.at('C') == 4.0);
  CHECK(t.at('D') == 3.5);
  CHECK(t.at('E') == 2.0);
  CHECK(t.at('F') == 2.0);
  CHECK(t.at('G') == 0.5);

  TransitionValues u = transition_values(sorted({3, 2.5, 2.5, 0.5}));
  CHECK(u.at('G') == 1.5);
  CHECK(u.at('B') == 3.0);
  CHECK(u.at('E') == 2.5);
  CHECK(u.at('A') == 2.5);
  CHECK(u.at('D') == 3.5);

  TransitionValues w = transition_values(sorted({2, 2, 1}));
  CHECK(w.at('A') == 3.0);
  CHECK(w.at('F') == 1.0);
  CHECK(w.at('D') == 1.0);
  CHECK(w.at('G') == 1.0);

  // Reported even when out of reach.
  TransitionValues v = transition_values(sorted({5, 1, 1}));
  CHECK(v.at('G') == -3.0);
  CHECK_FALSE(v.entry('G').reachable);
  CHECK(v.entry('A').reachable);
}

TEST_CASE("path class and vital values") {
  CHECK(path_class(sorted({3, 2.5, 2.5, 0.5})).id == PathClassId::I);
  CHECK(path_class(sorted({4, 3, 2, 0.5})).id == PathClassId::II);
  CHECK(path_class(sorted({2, 2, 1})).id == PathClassId::III);
  CHECK(path_class(sorted({2, 1})).id == PathClassId::III);
  // Boundary l_{n-2} equal to the tail sum selects class I.
  CHECK(path_class(sorted({4, 2, 1, 1})).id == PathClassId::I);

  CHECK(vital_critical_values(sorted({3, 2.5, 2.5, 0.5})) == std::vector<double>{1.5});
  CHECK(vital_critical_values(sorted({4, 3, 2, 0.5})) == std::vector<double>{4.5, 3.5, 0.5});
  CHECK(vital_critical_values(sorted({2, 2, 1})) == std::vector<double>{3.0, 1.0});
  CHECK(vital_critical_values(sorted({3, 2, 2})) == std::vector<double>{1.0});
  CHECK(classify_connectivity(sorted({3, 2, 2}), 1.0 - 1e-3).variant == Connectivity::Two);
  CHECK(classify_connectivity(sorted({3, 2, 2}), 1.0 + 1e-3).variant == Connectivity::One);
  CHECK(classify_connectivity(sorted({3, 2.5, 2.5, 0.5}), 1.49).variant == Connectivity::Two);
  CHECK(classify_connectivity(sorted({3, 2.5, 2.5, 0.5}), 1.51).variant == Connectivity::One);
}

TEST_CASE("connectivity agrees with the block taxonomy") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    SortedArm arm = normalize_arm(testing::random_arm(rng, n));
    ReachInterval r = reach_closed(arm.lengths);
    double lo = std::max(r.lo, 1e-6 * r.hi);
    for (int i = 0; i < 100; ++i) {
      double z = lo + (r.hi - lo) * (i + 0.5) / 100.0;
      Connectivity c = classify_connectivity(arm, z).variant;
      BlockState b = state_block(arm, z);
      if (b.at_transition || c == Connectivity::Critical) continue;
      REQUIRE(c != Connectivity::Infeasible);
      CHECK((c == Connectivity::Two) == is_lt(b.block));
    }
  }
}

TEST_CASE("vital values satisfy polygon equality") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    SortedArm arm = normalize_arm(testing::random_arm(rng, n));
    for (double v : vital_critical_values(arm)) {
      CHECK(v > 0.0);
      CHECK(v <= arm.total() * (1 + 1e-12));
      CHECK(std::abs(polygon_margin(arm.lengths, v)) <= 1e-12 * (arm.total() + v) * 4);
      CHECK(classify_connectivity(arm, v).variant == Connectivity::Critical);
    }
  }
}

TEST_CASE("downward sweeps avoid diagonal transitions and follow the class sequence") {
  const std::set<std::pair<StateBlock, StateBlock>> forbidden = {
      {StateBlock::GT_TOP, StateBlock::LT_MID},
      {StateBlock::LT_TOP, StateBlock::GT_MID},
      {StateBlock::GT_MID, StateBlock::LT_BOT},
      {StateBlock::LT_MID, StateBlock::GT_BOT},
  };
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    SortedArm arm = normalize_arm(testing::random_arm(rng, n));
    ReachInterval r = reach_closed(arm.lengths);
    PathClass pc = path_class(arm);
    // Dense grid plus every reachable transition value, so boundaries are hit as markers.
    std::vector<double> zs;
    const int steps = 2000;
    for (int i = 0; i <= steps; ++i) zs.push_back(r.hi - (r.hi - r.lo) * i / steps);
    // Also the midpoint of every gap between boundaries, so narrow blocks are sampled.
    std::vector<double> bounds{r.lo, r.hi, arm.lengths[0]};
    if (n >= 3) bounds.push_back(arm.lengths[2]);
    for (const TransitionValue& t : pc.transitions.entries) {
      if (t.applicable && t.z > r.lo && t.z < r.hi) bounds.push_back(t.z);
    }
    std::sort(bounds.begin(), bounds.end());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      zs.push_back(bounds[i]);
      if (i + 1 < bounds.size()) zs.push_back(0.5 * (bounds[i] + bounds[i + 1]));
    }
    zs.erase(std::remove_if(zs.begin(), zs.end(), [&](double z) { return z < r.lo || z > r.hi; }), zs.end());
    std::sort(zs.begin(), zs.end(), std::greater<>());
    std::vector<StateBlock> seen;
    bool prev_block = false;
    StateBlock prev = StateBlock::GT_TOP;
    for (double z : zs) {
      if (z <= 0.0) continue;
      BlockState b = state_block(arm, z);
      if (b.at_transition) {
        prev_block = false;
        continue;
      }
      if (prev_block && prev != b.block) {
        CHECK_MESSAGE(forbidden.count({prev, b.block}) == 0, "diagonal ", to_string(prev), " -> ", to_string(b.block));
      }
      if (seen.empty() || seen.back() != b.block) seen.push_back(b.block);
      prev = b.block;
      prev_block = true;
    }
    // Observed blocks form a subsequence of the declared order; a prefix once the top block exists.
    std::size_t k = 0;
    for (StateBlock b : seen) {
      while (k < pc.sequence.size() && pc.sequence[k] != b) ++k;
      CHECK(k < pc.sequence.size());
    }
    if (n >= 3) {
      REQUIRE(seen.size() <= pc.sequence.size());
      bool prefix = std::equal(seen.begin(), seen.end(), pc.sequence.begin());
      std::string got;
      for (StateBlock b : seen) got += std::string(to_string(b)) + " ";
      std::string arm_text;
      for (double x : arm.lengths) arm_text += std::to_string(x) + " ";
      CHECK_MESSAGE(prefix, "arm ", arm_text, "class ", std::string(to_string(pc.id)), " seen ", got);
    }
  }
}

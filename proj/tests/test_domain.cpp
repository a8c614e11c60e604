// Copyright 2026 The mogp Authors
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

#include <catch_amalgamated.hpp>

#include <random>

#include "mogp/domain.hpp"
#include "mogp/errors.hpp"
#include "oracles.hpp"

using namespace mogp;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

TEST_CASE("bonding space has the six process variables") {
  const auto space = DesignSpace::bonding();
  REQUIRE(space.dimension() == 6);
  CHECK(space.variable(0).kind == VariableKind::binary);
  CHECK(space.variable(1).lower == 300.0);
  CHECK(space.variable(1).upper == 500.0);
  CHECK(space.variable(2).lower == 5.0);
  CHECK(space.variable(2).upper == 250.0);
  CHECK(space.variable(3).lower == 0.2);
  CHECK(space.variable(3).upper == 2.0);
  CHECK(space.variable(4).kind == VariableKind::integer);
  CHECK(space.variable(4).lower == 1.0);
  CHECK(space.variable(4).upper == 50.0);
  CHECK(space.variable(5).lower == 1.0);
  CHECK(space.variable(5).upper == 120.0);
  for (std::size_t i = 0; i < 6; ++i) CHECK(space.variable(i).id == "v" + std::to_string(i + 1));
}

TEST_CASE("encode maps bounds to the unit interval") {
  const auto space = DesignSpace::bonding();
  const auto lo = space.encode({{0, 300, 5, 0.2, 1, 1}});
  const auto hi = space.encode({{1, 500, 250, 2, 50, 120}});
  for (double u : lo) CHECK(u == 0.0);
  for (double u : hi) CHECK(u == 1.0);
  CHECK_THAT(space.encode({{0, 400, 127.5, 1.1, 13, 1}})[3], WithinAbs(0.5, 1e-15));
}

TEST_CASE("encode rejects out-of-bounds values naming the variable") {
  const auto space = DesignSpace::bonding();
  CHECK_THROWS_WITH(space.encode({{0, 600, 5, 0.2, 1, 1}}), ContainsSubstring("v2"));
  CHECK_THROWS_WITH(space.encode({{0.5, 400, 5, 0.2, 1, 1}}), ContainsSubstring("v1"));
  CHECK_THROWS_WITH(space.encode({{0, 400, 5, 0.2, 1.5, 1}}), ContainsSubstring("v5"));
  CHECK_THROWS_AS(space.encode({{0, 400, 5}}), DomainError);
}

TEST_CASE("decode inverts encode and applies rounding") {
  const auto space = DesignSpace::bonding();
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> unit(6);
    for (auto& x : unit) x = u(gen);
    const auto c = space.decode(unit);
    REQUIRE(space.contains(c));
    CHECK((c[0] == 0.0 || c[0] == 1.0));
    CHECK(c[4] == std::round(c[4]));
    const auto back = space.decode(space.encode(c));
    for (std::size_t i = 0; i < 6; ++i) CHECK_THAT(back[i], WithinAbs(c[i], 1e-9 * std::max(1.0, std::fabs(c[i]))));
  }
  // Binary threshold at 0.5 and half-up for integers.
  CHECK(space.decode(std::vector<double>{0.5, 0, 0, 0, 0, 0})[0] == 1.0);
  CHECK(space.decode(std::vector<double>{0.4999, 0, 0, 0, 0, 0})[0] == 0.0);
  CHECK(space.round({0, 400, 100, 1, 1.5, 10})[4] == 2.0);
  CHECK(space.round({0, 400, 100, 1, 2.4999, 10})[4] == 2.0);
  // Out-of-cube unit values are clipped.
  CHECK(space.decode(std::vector<double>{-1, 2, 0, 0, 0, 0})[1] == 500.0);
}

TEST_CASE("dominance examples") {
  CHECK(dominates({1.0, -30}, {2.0, -20}));
  CHECK_FALSE(dominates({1.0, -30}, {1.0, -30}));
  CHECK_FALSE(dominates({1.0, -20}, {2.0, -30}));
  CHECK(strictly_dominates({1, -30}, {2, -20}));
  CHECK_FALSE(strictly_dominates({1, -30}, {1, -20}));
  CHECK_FALSE(strictly_dominates({2, -20}, {1, -30}));
}

TEST_CASE("dominance is irreflexive and transitive on random samples") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> coarse(0, 4);  // ties are common
  std::vector<ObjectiveVector> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({double(coarse(gen)), double(coarse(gen))});
  for (const auto& a : pts) {
    CHECK_FALSE(dominates(a, a));
    for (const auto& b : pts) {
      for (const auto& c : pts) {
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("pareto_filter hand case and edge cases") {
  std::vector<ObjectiveVector> pts{{1, -30}, {2, -20}, {1.5, -25}};
  CHECK(pareto_filter(pts) == std::vector<std::size_t>{0});
  CHECK(pareto_filter(std::vector<ObjectiveVector>{{1, -30}}) == std::vector<std::size_t>{0});
  CHECK(pareto_filter(std::vector<ObjectiveVector>{}).empty());
  std::vector<ObjectiveVector> dup{{1, 1}, {1, 1}, {2, 2}};
  CHECK(pareto_filter(dup) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("pareto_filter matches the brute-force oracle") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int set = 0; set < 50; ++set) {
    std::vector<ObjectiveVector> pts;
    std::vector<oracle::Point2> ref;
    for (int i = 0; i < 50; ++i) {
      const double a = set % 2 ? std::round(u(gen) * 8) : u(gen);
      const double b = set % 2 ? std::round(u(gen) * 8) : u(gen);
      pts.push_back({a, b});
      ref.push_back({a, b});
    }
    const auto got = pareto_filter(pts);
    REQUIRE(got == oracle::pareto(ref));
    // No member dominates another; every excluded point is dominated by a member.
    for (auto i : got) {
      for (auto j : got) CHECK_FALSE(dominates(pts[i], pts[j]));
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (std::find(got.begin(), got.end(), k) != got.end()) continue;
      bool covered = false;
      for (auto i : got) covered = covered || dominates(pts[i], pts[k]);
      CHECK(covered);
    }
  }
}

Outcome make(bool feasible, double strength = 20, double cost = 1) {
  return {strength, cost, feasible ? FailureMode::cohesive : FailureMode::adhesion, false};
}

TEST_CASE("outcome feasibility is the stated conjunction") {
  for (auto mode : {FailureMode::adhesion, FailureMode::cohesive, FailureMode::substrate}) {
    for (bool damage : {false, true}) {
      Outcome o{10, 1, mode, damage};
      CHECK(o.feasible() == (!damage && mode != FailureMode::adhesion));
    }
  }
  CHECK(Outcome{10, 1, FailureMode::cohesive, false}.objectives() == ObjectiveVector{1, -10});
}

TEST_CASE("majority feasibility equals pf >= 0.5 for every r up to 10") {
  for (int r = 1; r <= 10; ++r) {
    for (int k = 0; k <= r; ++k) {
      std::vector<Outcome> outs;
      for (int i = 0; i < r; ++i) outs.push_back(make(i < k));
      const auto obs = ReplicatedObservation::from_outcomes({{0, 400, 100, 1, 10, 10}}, outs);
      CHECK(obs.pf() == double(k) / r);
      CHECK(obs.majority_feasible() == (obs.pf() >= 0.5));
      CHECK(obs.majority_feasible() == feasible_fraction_ok(obs.pf()));
    }
  }
}

TEST_CASE("replicated statistics use unbiased variances") {
  const auto obs = ReplicatedObservation::from_outcomes(
      {{0, 400, 100, 1, 10, 10}}, {make(true, 10, 1), make(true, 20, 2), make(false, 30, 3)});
  CHECK_THAT(obs.mean_objectives().cost, WithinAbs(2.0, 1e-15));
  CHECK_THAT(obs.mean_objectives().neg_strength, WithinAbs(-20.0, 1e-15));
  CHECK_THAT(obs.var_objectives().cost, WithinAbs(1.0, 1e-15));
  CHECK_THAT(obs.var_objectives().neg_strength, WithinAbs(100.0, 1e-12));
  const auto single = ReplicatedObservation::from_outcomes({{0, 400, 100, 1, 10, 10}}, {make(true, 10, 1)});
  CHECK(single.var_objectives().cost == 0.0);
  CHECK_THROWS_AS(ReplicatedObservation::from_outcomes({{0, 400, 100, 1, 10, 10}}, {}), DomainError);
}

TEST_CASE("failure mode parsing lists valid values") {
  CHECK(parse_failure_mode("substrate") == FailureMode::substrate);
  CHECK(to_string(FailureMode::adhesion) == "adhesion");
  CHECK_THROWS_WITH(parse_failure_mode("glue"), ContainsSubstring("adhesion") && ContainsSubstring("cohesive") &&
                                                    ContainsSubstring("substrate"));
}

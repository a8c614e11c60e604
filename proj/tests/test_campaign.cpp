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

#include <filesystem>
#include <fstream>
#include <set>

#include "mogp/campaign.hpp"
#include "mogp/simulator.hpp"
#include "oracles.hpp"

using namespace mogp;

namespace {

CampaignSettings small_settings() {
  CampaignSettings s;
  s.init_size = 8;
  s.iterations = 4;
  s.replications = 3;
  s.gp_restarts = 3;
  s.pso.swarm_size = 15;
  s.pso.max_iterations = 30;
  s.seed = 5;
  return s;
}

Evaluator simulator_evaluator(Simulator& sim, int r) {
  return [&sim, r](const Configuration& c) { return sim.evaluate(c, r); };
}

void tell_design(Campaign& c, Simulator& sim) {
  for (const auto& x : c.pending_design()) c.tell(x, sim.evaluate(x, c.settings().replications));
}

}  // namespace

TEST_CASE("campaign phases follow the ask/tell protocol") {
  auto c = Campaign::initialize(small_settings());
  Simulator sim(SimulatorSettings{.seed = 1});
  CHECK(c.phase() == Phase::design);
  CHECK(c.design().size() == 8);
  CHECK_THROWS_AS(c.suggest(), StateError);

  const auto first = c.pending_design().front();
  CHECK_THROWS_AS(c.tell(first, sim.evaluate(first, 2)), DomainError);
  CHECK_THROWS_AS(c.tell({{0, 300, 5, 0.2, 1, 1}}, sim.evaluate(first, 3)), DomainError);
  tell_design(c, sim);
  CHECK(c.phase() == Phase::optimizing);
  CHECK(c.observations().size() == 8);

  const auto s1 = c.suggest();
  CHECK(c.suggest() == s1);
  CHECK(c.pending_suggestion().has_value());
  c.tell(s1, sim.evaluate(s1, 3));
  CHECK(c.iteration() == 1);
  CHECK_FALSE(c.pending_suggestion().has_value());
  while (!c.budget_exhausted()) {
    const auto x = c.suggest();
    c.tell(x, sim.evaluate(x, 3));
  }
  CHECK(c.phase() == Phase::exhausted);
  CHECK_THROWS_AS(c.suggest(), BudgetExhausted);
  CHECK(c.observations().size() == 12);
  CHECK(c.hv_history().size() == 12);
}

TEST_CASE("a full default run spends exactly the budget") {
  CampaignSettings s;
  Simulator sim(SimulatorSettings{.seed = 2});
  const auto result = run(s, simulator_evaluator(sim, s.replications));
  CHECK(sim.calls() == 300);
  CHECK(result.outcome_records == 300);
  CHECK(result.campaign.observations().size() == 60);
  CHECK(result.hv_history.size() == 60);
  for (std::size_t i = 1; i < result.hv_history.size(); ++i) {
    CHECK(result.hv_history[i] >= result.hv_history[i - 1]);
  }

  std::set<double> seen;
  // 40 iterations cover three full weight cycles.
  for (int it = 1; it <= 33; ++it) seen.insert(next_weights(it, derive_seed(s.seed, "weights")).lambda[0]);
  CHECK(seen.size() == kWeightGridSize);
}

TEST_CASE("saved state resumes to the same suggestion") {
  auto c = Campaign::initialize(small_settings());
  Simulator sim(SimulatorSettings{.seed = 3});
  tell_design(c, sim);
  const auto x = c.suggest();
  c.tell(x, sim.evaluate(x, 3));

  const auto dir = std::filesystem::temp_directory_path() / "mogp_test_campaign";
  std::filesystem::create_directories(dir);
  const auto path = dir / "state.json";
  c.save(path);
  auto loaded = Campaign::load(path);
  CHECK(loaded.serialize() == c.serialize());
  CHECK(loaded.suggest() == c.suggest());

  std::string text = c.serialize();
  CHECK_THROWS_AS(Campaign::deserialize(text.substr(0, text.size() / 2)), FormatError);
  CHECK_THROWS_AS(Campaign::deserialize("{\"schema_version\": 99}"), FormatError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("identical seeds give identical campaigns") {
  const auto s = small_settings();
  Simulator a(SimulatorSettings{.seed = 4}), b(SimulatorSettings{.seed = 4});
  const auto ra = run(s, simulator_evaluator(a, 3));
  const auto rb = run(s, simulator_evaluator(b, 3));
  CHECK(ra.campaign.serialize() == rb.campaign.serialize());
}

TEST_CASE("incumbent falls back to the most likely feasible point") {
  const std::vector<double> means{0.1, 0.5, 0.3, 0.2};
  const std::vector<double> pf{0.9, 0.2, 0.6, 0.8};
  CHECK(select_incumbent(means, pf, {false, true, true, false}) == 2);
  CHECK(select_incumbent(means, pf, {false, false, false, false}) == 0);
  const std::vector<double> tie{0.4, 0.8, 0.8, 0.1};
  CHECK(select_incumbent(means, tie, {false, false, false, false}) == 2);
}

TEST_CASE("campaign front equals a brute-force filter of feasible means") {
  auto s = small_settings();
  s.iterations = 2;
  Simulator sim(SimulatorSettings{.seed = 6});
  const auto result = run(s, simulator_evaluator(sim, 3));
  std::vector<oracle::Point2> pts;
  for (const auto& o : result.campaign.observations()) {
    if (o.majority_feasible()) pts.push_back({o.mean_objectives().cost, o.mean_objectives().neg_strength});
  }
  const auto idx = oracle::pareto(pts);
  const auto front = result.campaign.current_front();
  REQUIRE(front.points.size() == idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    CHECK(front.points[i].mean.cost == pts[idx[i]].a);
    CHECK(front.points[i].mean.neg_strength == pts[idx[i]].b);
  }
  CHECK(front.hv == result.hv_history.back());
}

TEST_CASE("invalid settings are rejected") {
  auto s = small_settings();
  s.init_size = 1;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = small_settings();
  s.replications = 0;
  CHECK_THROWS_AS(Campaign::initialize(s), DomainError);
}

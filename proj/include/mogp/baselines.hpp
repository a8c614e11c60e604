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

#pragma once

// Budget-matched comparison optimizers: uniform random search and a small
// constrained NSGA-II working on sample means of replicated evaluations.

#include <cstdint>
#include <vector>

#include "mogp/campaign.hpp"
#include "mogp/domain.hpp"
#include "mogp/metrics.hpp"

namespace mogp {

struct BaselineResult {
  std::vector<ReplicatedObservation> observations;  // evaluation order
  FrontReport front;
  std::vector<double> hv_history;  // archive HV after each configuration
  std::uint64_t outcome_records = 0;
  /// NSGA-II only: observation indices of the population after each
  /// generation (entry 0 is the initial population).
  std::vector<std::vector<std::size_t>> populations;
};

/// `budget` configurations evaluated r times each. The first configurations
/// come from `initial` (if given); the rest are uniform in the unit cube.
BaselineResult random_search(int budget, int r, const DesignSpace& space, const Evaluator& evaluator,
                             std::uint64_t seed, const ObjectiveVector& ref = kDefaultReference,
                             const std::vector<Configuration>& initial = {});

struct EaSettings {
  int population = 20;
  int generations = 2;
  double crossover_probability = 0.9;
  double mutation_probability = 0.5;
  double blend_alpha = 0.5;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Constrained domination on replicated observations: feasible beats
/// infeasible, two infeasible compare by pf (higher wins), two feasible by
/// Pareto dominance of the sample means.
bool constrained_dominates(const ReplicatedObservation& a, const ReplicatedObservation& b);

/// Fronts of indices into `members` under constrained domination.
std::vector<std::vector<std::size_t>> nondominated_sort(const std::vector<const ReplicatedObservation*>& members);

/// Crowding distance of each member of one front (same order); boundary
/// points get +infinity.
std::vector<double> crowding_distance(const std::vector<const ReplicatedObservation*>& front);

/// Exactly population * (1 + generations) configurations are evaluated. The
/// initial population is `initial` when given (must have `population`
/// points), otherwise a Latin hypercube from the seed.
BaselineResult nsga2_constrained(const EaSettings& settings, int r, const DesignSpace& space,
                                 const Evaluator& evaluator, const ObjectiveVector& ref = kDefaultReference,
                                 const std::vector<Configuration>& initial = {});

}  // namespace mogp

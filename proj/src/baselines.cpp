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

#include "mogp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mogp/doe.hpp"
#include "mogp/errors.hpp"
#include "mogp/rng.hpp"

namespace mogp {

namespace {

std::vector<double> archive_history(const std::vector<ReplicatedObservation>& observations,
                                    const ObjectiveVector& ref) {
  std::vector<double> out;
  std::vector<ObjectiveVector> archive;
  for (const auto& obs : observations) {
    if (obs.majority_feasible()) {
      archive.push_back(obs.mean_objectives());
      std::vector<ObjectiveVector> front;
      for (auto i : pareto_filter(archive)) front.push_back(archive[i]);
      archive = std::move(front);
    }
    out.push_back(hypervolume(archive, ref));
  }
  return out;
}

struct Evaluated {
  std::vector<double> genes;  // unit-scaled, after rounding
  std::size_t observation = 0;
};

}  // namespace

BaselineResult random_search(int budget, int r, const DesignSpace& space, const Evaluator& evaluator,
                             std::uint64_t seed, const ObjectiveVector& ref,
                             const std::vector<Configuration>& initial) {
  if (budget < 1) throw DomainError("random_search: budget must be >= 1");
  if (r < 1) throw DomainError("random_search: replications must be >= 1");
  BaselineResult result;
  Rng rng(derive_seed(seed, "random-search"));
  std::vector<double> u(space.dimension());
  for (int i = 0; i < budget; ++i) {
    Configuration c;
    if (static_cast<std::size_t>(i) < initial.size()) {
      c = initial[static_cast<std::size_t>(i)];
    } else {
      for (auto& x : u) x = rng.uniform();
      c = space.decode(u);
    }
    auto outcomes = evaluator(c);
    if (static_cast<int>(outcomes.size()) != r) throw DomainError("evaluator returned the wrong replication count");
    result.outcome_records += outcomes.size();
    result.observations.push_back(ReplicatedObservation::from_outcomes(std::move(c), std::move(outcomes)));
  }
  result.front = make_front_report(result.observations, ref, space);
  result.hv_history = archive_history(result.observations, ref);
  return result;
}

void EaSettings::validate() const {
  if (population < 2) throw DomainError("population must be at least 2");
  if (generations < 0) throw DomainError("generations must be >= 0");
  if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0)) {
    throw DomainError("crossover probability must lie in [0, 1]");
  }
  if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) {
    throw DomainError("mutation probability must lie in [0, 1]");
  }
  if (!(blend_alpha >= 0.0)) throw DomainError("blend alpha must be >= 0");
}

bool constrained_dominates(const ReplicatedObservation& a, const ReplicatedObservation& b) {
  const bool fa = a.majority_feasible();
  const bool fb = b.majority_feasible();
  if (fa && !fb) return true;
  if (!fa && fb) return false;
  if (!fa && !fb) return a.pf() > b.pf();
  return dominates(a.mean_objectives(), b.mean_objectives());
}

std::vector<std::vector<std::size_t>> nondominated_sort(const std::vector<const ReplicatedObservation*>& members) {
  const std::size_t n = members.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> count(n, 0);
  std::vector<std::vector<std::size_t>> fronts(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (constrained_dominates(*members[i], *members[j])) {
        dominated[i].push_back(j);
      } else if (constrained_dominates(*members[j], *members[i])) {
        ++count[i];
      }
    }
    if (count[i] == 0) fronts[0].push_back(i);
  }
  while (!fronts.back().empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : fronts.back()) {
      for (std::size_t j : dominated[i]) {
        if (--count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(next));
  }
  fronts.pop_back();
  return fronts;
}

std::vector<double> crowding_distance(const std::vector<const ReplicatedObservation*>& front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    return dist;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < ObjectiveVector::size(); ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return front[a]->mean_objectives()[j] < front[b]->mean_objectives()[j];
    });
    const double lo = front[order.front()]->mean_objectives()[j];
    const double hi = front[order.back()]->mean_objectives()[j];
    dist[order.front()] = std::numeric_limits<double>::infinity();
    dist[order.back()] = std::numeric_limits<double>::infinity();
    if (hi <= lo) continue;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      dist[order[k]] += (front[order[k + 1]]->mean_objectives()[j] - front[order[k - 1]]->mean_objectives()[j]) /
                        (hi - lo);
    }
  }
  return dist;
}

BaselineResult nsga2_constrained(const EaSettings& settings, int r, const DesignSpace& space,
                                 const Evaluator& evaluator, const ObjectiveVector& ref,
                                 const std::vector<Configuration>& initial) {
  settings.validate();
  if (r < 1) throw DomainError("nsga2: replications must be >= 1");
  const auto pop_size = static_cast<std::size_t>(settings.population);
  const std::size_t d = space.dimension();
  Rng rng(derive_seed(settings.seed, "nsga2"));
  BaselineResult result;

  auto evaluate = [&](Configuration c) {
    Evaluated e;
    e.genes = space.encode(c);
    auto outcomes = evaluator(c);
    if (static_cast<int>(outcomes.size()) != r) throw DomainError("evaluator returned the wrong replication count");
    result.outcome_records += outcomes.size();
    result.observations.push_back(ReplicatedObservation::from_outcomes(std::move(c), std::move(outcomes)));
    e.observation = result.observations.size() - 1;
    return e;
  };

  std::vector<Configuration> start = initial;
  if (start.empty()) start = latin_hypercube(settings.population, space, derive_seed(settings.seed, "design")).points;
  if (start.size() != pop_size) throw DomainError("initial population has the wrong size");

  std::vector<Evaluated> population;
  for (auto& c : start) population.push_back(evaluate(c));

  auto ranks_of = [&](const std::vector<Evaluated>& group, std::vector<int>& rank, std::vector<double>& crowd,
                      std::vector<std::vector<std::size_t>>& fronts) {
    std::vector<const ReplicatedObservation*> members;
    for (const auto& e : group) members.push_back(&result.observations[e.observation]);
    fronts = nondominated_sort(members);
    rank.assign(group.size(), 0);
    crowd.assign(group.size(), 0.0);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
      std::vector<const ReplicatedObservation*> fm;
      for (auto i : fronts[f]) fm.push_back(members[i]);
      const auto cd = crowding_distance(fm);
      for (std::size_t k = 0; k < fronts[f].size(); ++k) {
        rank[fronts[f][k]] = static_cast<int>(f);
        crowd[fronts[f][k]] = cd[k];
      }
    }
  };

  auto record_population = [&] {
    std::vector<std::size_t> ids;
    for (const auto& e : population) ids.push_back(e.observation);
    result.populations.push_back(std::move(ids));
  };
  record_population();

  std::vector<int> rank;
  std::vector<double> crowd;
  std::vector<std::vector<std::size_t>> fronts;
  for (int g = 0; g < settings.generations; ++g) {
    ranks_of(population, rank, crowd, fronts);
    auto tournament = [&]() -> const Evaluated& {
      const auto a = static_cast<std::size_t>(rng.below(pop_size));
      const auto b = static_cast<std::size_t>(rng.below(pop_size));
      if (rank[a] != rank[b]) return population[rank[a] < rank[b] ? a : b];
      if (crowd[a] != crowd[b]) return population[crowd[a] > crowd[b] ? a : b];
      return population[std::min(a, b)];
    };

    // Variation runs in a fixed order so offspring depend only on the seed.
    std::vector<std::vector<double>> children;
    while (children.size() < pop_size) {
      auto c1 = tournament().genes;
      auto c2 = tournament().genes;
      if (rng.uniform() < settings.crossover_probability) {
        for (std::size_t k = 0; k < d; ++k) {
          const double lo = std::min(c1[k], c2[k]);
          const double hi = std::max(c1[k], c2[k]);
          const double ext = settings.blend_alpha * (hi - lo);
          c1[k] = std::clamp(rng.uniform(lo - ext, hi + ext), 0.0, 1.0);
          c2[k] = std::clamp(rng.uniform(lo - ext, hi + ext), 0.0, 1.0);
        }
      }
      for (auto* child : {&c1, &c2}) {
        if (rng.uniform() < settings.mutation_probability) {
          // Uniform reset of each gene with probability 1/d, at least one gene.
          const auto forced = static_cast<std::size_t>(rng.below(d));
          for (std::size_t k = 0; k < d; ++k) {
            const bool hit = rng.uniform() < 1.0 / static_cast<double>(d);
            if (hit || k == forced) (*child)[k] = rng.uniform();
          }
        }
      }
      children.push_back(std::move(c1));
      if (children.size() < pop_size) children.push_back(std::move(c2));
    }

    std::vector<Evaluated> combined = population;
    for (const auto& genes : children) combined.push_back(evaluate(space.decode(genes)));

    ranks_of(combined, rank, crowd, fronts);
    std::vector<Evaluated> next;
    for (const auto& front : fronts) {
      if (next.size() + front.size() <= pop_size) {
        for (auto i : front) next.push_back(combined[i]);
      } else {
        std::vector<std::size_t> order = front;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
        for (auto i : order) {
          if (next.size() == pop_size) break;
          next.push_back(combined[i]);
        }
      }
      if (next.size() == pop_size) break;
    }
    population = std::move(next);
    record_population();
  }

  result.front = make_front_report(result.observations, ref, space);
  result.hv_history = archive_history(result.observations, ref);
  return result;
}

}  // namespace mogp

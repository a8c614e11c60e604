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

#include "mogp/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mogp/errors.hpp"
#include "mogp/rng.hpp"

namespace mogp {

void WeightVector::validate() const {
  double sum = 0.0;
  for (double l : lambda) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw DomainError("weights must be finite and >= 0");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw DomainError("weights must sum to 1");
}

NormalizationBounds NormalizationBounds::from_points(std::span<const ObjectiveVector> points) {
  NormalizationBounds b;
  if (points.empty()) return b;
  b.min = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  b.max = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : points) {
    for (std::size_t j = 0; j < 2; ++j) {
      b.min[j] = std::min(b.min[j], p[j]);
      b.max[j] = std::max(b.max[j], p[j]);
    }
  }
  return b;
}

NormalizationBounds NormalizationBounds::from_observations(std::span<const ReplicatedObservation> observations) {
  std::vector<ObjectiveVector> means;
  means.reserve(observations.size());
  for (const auto& o : observations) means.push_back(o.mean_objectives());
  return from_points(means);
}

double tchebycheff(std::span<const double> f, const WeightVector& weights, double rho) {
  if (f.size() != weights.lambda.size()) throw DomainError("tchebycheff: objective/weight length mismatch");
  if (rho < 0.0) throw DomainError("tchebycheff: rho must be >= 0");
  double worst = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double term = weights.lambda[j] * f[j];
    worst = std::max(worst, term);
    sum += term;
  }
  if (f.empty()) return 0.0;
  return worst + rho * sum;
}

std::array<double, 2> normalize(const ObjectiveVector& v, const NormalizationBounds& bounds) {
  std::array<double, 2> out{};
  for (std::size_t j = 0; j < 2; ++j) {
    const double span = bounds.max[j] - bounds.min[j];
    out[j] = span > 0.0 ? (v[j] - bounds.min[j]) / span : 0.5;
  }
  return out;
}

WeightVector next_weights(int iteration, std::uint64_t seed) {
  if (iteration < 1) throw DomainError("next_weights: iteration must be >= 1");
  const auto cycle = static_cast<std::uint64_t>((iteration - 1) / kWeightGridSize);
  const int position = (iteration - 1) % kWeightGridSize;
  std::array<int, kWeightGridSize> order{};
  std::iota(order.begin(), order.end(), 0);
  Rng rng(derive_seed(seed, "weight-cycle", cycle));
  for (int i = kWeightGridSize - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  const int l = order[position];
  // l/10 and its complement computed so the pair sums to exactly 1.
  const double first = static_cast<double>(l) / 10.0;
  return WeightVector{{first, 1.0 - first}};
}

double scalarize(const ObjectiveVector& v, const WeightVector& weights, double rho,
                 const NormalizationBounds& bounds) {
  const auto f = normalize(v, bounds);
  return tchebycheff(f, weights, rho);
}

ScalarizedObservation scalarize_observation(const ReplicatedObservation& obs, const WeightVector& weights,
                                            double rho, const NormalizationBounds& bounds) {
  std::vector<double> values;
  values.reserve(obs.replications());
  for (const auto& o : obs.outcomes()) values.push_back(scalarize(o.objectives(), weights, rho, bounds));
  const auto mv = sample_mean_var(values);
  ScalarizedObservation out;
  out.mean = mv.mean;
  out.variance_of_mean = obs.replications() > 1 ? mv.variance / static_cast<double>(obs.replications()) : 0.0;
  return out;
}

}  // namespace mogp

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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mogp/domain.hpp"

namespace mogp {

struct WeightVector {
  std::vector<double> lambda;

  /// Throws DomainError unless all entries are >= 0 and sum to 1 (1e-12).
  void validate() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Per-objective min and max of the sample means seen so far.
struct NormalizationBounds {
  std::array<double, 2> min{0.0, 0.0};
  std::array<double, 2> max{0.0, 0.0};

  static NormalizationBounds from_observations(std::span<const ReplicatedObservation> observations);
  static NormalizationBounds from_points(std::span<const ObjectiveVector> points);
};

/// Augmented Tchebycheff: max_j lambda_j f_j + rho * sum_j lambda_j f_j.
double tchebycheff(std::span<const double> f, const WeightVector& weights, double rho);

/// (v - min) / (max - min) per objective; 0.5 on a degenerate (max == min) axis.
std::array<double, 2> normalize(const ObjectiveVector& v, const NormalizationBounds& bounds);

/// Number of points on the two-objective weight grid {(l/10, 1 - l/10)}.
inline constexpr int kWeightGridSize = 11;

/// Weight for a 1-based iteration: the grid is visited without replacement in
/// a seeded random order that is reshuffled for every cycle of 11 iterations.
/// A pure function of (iteration, seed).
WeightVector next_weights(int iteration, std::uint64_t seed);

struct ScalarizedObservation {
  double mean = 0.0;
  double variance_of_mean = 0.0;  // sample variance / r, 0 when r = 1
};

/// Normalizes and scalarizes every replication separately, then returns the
/// sample mean and sample-variance-over-r of the resulting scalars.
ScalarizedObservation scalarize_observation(const ReplicatedObservation& obs, const WeightVector& weights,
                                            double rho, const NormalizationBounds& bounds);

/// Normalize-then-scalarize for a single objective vector.
double scalarize(const ObjectiveVector& v, const WeightVector& weights, double rho,
                 const NormalizationBounds& bounds);

}  // namespace mogp

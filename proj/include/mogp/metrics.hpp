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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mogp/domain.hpp"
#include "mogp/simulator.hpp"

namespace mogp {

/// Hypervolume reference point in minimization space: cost 3, strength 4.
inline constexpr ObjectiveVector kDefaultReference{3.0, -4.0};

/// Exact two-objective hypervolume dominated by the front and bounded by ref.
/// Points that do not strictly dominate ref contribute nothing.
double hypervolume(std::span<const ObjectiveVector> front, const ObjectiveVector& ref);

/// Dominance-aware distance d+(a, z) = sqrt(sum_j max(a_j - z_j, 0)^2).
double igd_plus_distance(const ObjectiveVector& a, const ObjectiveVector& z);

/// Mean over reference points of the smallest d+ to any front point.
/// Returns +infinity for an empty front; throws DomainError for an empty
/// reference front.
double igd_plus(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference);

struct FrontPoint {
  Configuration config;
  ObjectiveVector mean;
  double pf = 0.0;
};

struct VariableDistribution {
  std::string id;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double lower = 0.0;  // histogram range
  double upper = 0.0;
  std::vector<std::size_t> histogram;  // kHistogramBins fixed-width bins
};

struct InputDistribution {
  std::size_t pooled = 0;
  std::vector<VariableDistribution> variables;
  /// Share of pooled solutions with the binary pre-processing flag set.
  double preprocessing_fraction = 0.0;
};

inline constexpr int kHistogramBins = 20;

struct FrontReport {
  std::vector<FrontPoint> points;
  double hv = 0.0;
  std::optional<double> igd_plus;
  std::optional<InputDistribution> inputs;

  std::vector<ObjectiveVector> objectives() const;
};

/// Majority-feasible Pareto front of the sample means, with its hypervolume.
FrontReport make_front_report(std::span<const ReplicatedObservation> observations, const ObjectiveVector& ref,
                              const DesignSpace& space = DesignSpace::bonding());

/// Linear interpolation between order statistics (h = (n - 1) q).
double percentile(std::vector<double> values, double q);

/// Pools the configurations of all fronts and summarizes each variable.
InputDistribution input_distribution(std::span<const FrontReport> fronts,
                                     const DesignSpace& space = DesignSpace::bonding());

/// Estimated ideal front: n Halton configurations, r replications each,
/// noise-free, majority-feasible Pareto filter of the sample means.
std::vector<FrontPoint> reference_front(const SimulatorSettings& settings, int n, int r,
                                        const DesignSpace& space = DesignSpace::bonding());

/// CSV: header "kind,v1..v6,strength_mean,cost_mean,pf,hv,igd_plus", one
/// "point" row per front member and a final "summary" row.
std::string front_report_csv(const FrontReport& report, const DesignSpace& space = DesignSpace::bonding());
/// Reads the point rows (and summary, if present) back.
FrontReport parse_front_report_csv(const std::string& text, const DesignSpace& space = DesignSpace::bonding());

std::string input_distribution_csv(const InputDistribution& dist);

}  // namespace mogp

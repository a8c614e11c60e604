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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mogp {

/// Modified expected improvement for minimization:
///   (z_min - z*) Phi(u) + s* phi(u),  u = (z_min - z*) / s*
/// z_min is the model prediction at the incumbent and s* the ordinary-kriging
/// standard deviation at the candidate. For s* < 1e-12 the limit
/// max(z_min - z*, 0) is returned.
double mei(double z_min, double z_star, double s_star);

/// MEI weighted by the probability of feasibility.
double cmei(double mei_value, double pf);

double normal_pdf(double x);
double normal_cdf(double x);

struct PsoSettings {
  int swarm_size = 50;
  int max_iterations = 1800;
  int max_stall_iterations = 10;
  double tolerance = 1e-6;
  double inertia = 0.729;
  double cognitive = 1.49445;
  double social = 1.49445;
  double velocity_clamp = 0.2;  // fraction of the unit range
  std::uint64_t seed = 0;

  void validate() const;
};

struct PsoResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool stalled = false;
  /// Objective at every initial particle position, in particle order.
  std::vector<double> initial_values;
};

/// Global-best particle swarm maximization over [0,1]^d. Positions are
/// clipped to the cube; velocities are clamped per dimension. Stops after
/// max_iterations, or once the best value has improved by less than
/// tolerance over max_stall_iterations consecutive iterations. Non-finite
/// objective values are treated as -infinity. The global best is updated in
/// particle-index order, so results depend only on the seed.
PsoResult pso_maximize(const std::function<double(std::span<const double>)>& objective, std::size_t dimension,
                       const PsoSettings& settings);

}  // namespace mogp

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

#include "mogp/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mogp/errors.hpp"
#include "mogp/rng.hpp"

namespace mogp {

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double mei(double z_min, double z_star, double s_star) {
  const double improvement = z_min - z_star;
  if (s_star < 1e-12) return std::max(improvement, 0.0);
  const double u = improvement / s_star;
  // Rounding can push the sum a hair below zero deep in the lower tail.
  return std::max(0.0, improvement * normal_cdf(u) + s_star * normal_pdf(u));
}

double cmei(double mei_value, double pf) { return mei_value * pf; }

void PsoSettings::validate() const {
  if (swarm_size < 2) throw DomainError("PSO swarm size must be at least 2");
  if (max_iterations < 0) throw DomainError("PSO max iterations must be >= 0");
  if (max_stall_iterations < 1) throw DomainError("PSO max stall iterations must be >= 1");
  if (!(tolerance > 0.0)) throw DomainError("PSO tolerance must be positive");
  if (!(velocity_clamp > 0.0)) throw DomainError("PSO velocity clamp must be positive");
}

PsoResult pso_maximize(const std::function<double(std::span<const double>)>& objective, std::size_t dimension,
                       const PsoSettings& settings) {
  settings.validate();
  if (dimension == 0) throw DomainError("pso_maximize: dimension must be positive");
  const auto n = static_cast<std::size_t>(settings.swarm_size);
  const double vmax = settings.velocity_clamp;
  constexpr double kRejected = -std::numeric_limits<double>::infinity();
  auto eval = [&](std::span<const double> x) {
    const double v = objective(x);
    return std::isfinite(v) ? v : kRejected;
  };

  Rng rng(settings.seed);
  std::vector<std::vector<double>> pos(n, std::vector<double>(dimension));
  std::vector<std::vector<double>> vel(n, std::vector<double>(dimension));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t k = 0; k < dimension; ++k) {
      pos[p][k] = rng.uniform();
      vel[p][k] = rng.uniform(-vmax, vmax);
    }
  }
  auto personal = pos;
  std::vector<double> personal_value(n);
  PsoResult result;
  result.value = kRejected;
  result.x = pos.front();
  result.initial_values.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    personal_value[p] = eval(pos[p]);
    result.initial_values[p] = personal_value[p];
    if (personal_value[p] > result.value) {
      result.value = personal_value[p];
      result.x = pos[p];
    }
  }

  // best_history[i] = global best after iteration i (index 0 = initial swarm).
  std::vector<double> best_history{result.value};
  for (int it = 1; it <= settings.max_iterations; ++it) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t k = 0; k < dimension; ++k) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        double v = settings.inertia * vel[p][k] + settings.cognitive * r1 * (personal[p][k] - pos[p][k]) +
                   settings.social * r2 * (result.x[k] - pos[p][k]);
        v = std::clamp(v, -vmax, vmax);
        double x = pos[p][k] + v;
        if (x < 0.0 || x > 1.0) {
          x = std::clamp(x, 0.0, 1.0);
          v = 0.0;
        }
        vel[p][k] = v;
        pos[p][k] = x;
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      const double value = eval(pos[p]);
      if (value > personal_value[p]) {
        personal_value[p] = value;
        personal[p] = pos[p];
        if (value > result.value) {
          result.value = value;
          result.x = pos[p];
        }
      }
    }
    result.iterations = it;
    best_history.push_back(result.value);
    const auto window = static_cast<std::size_t>(settings.max_stall_iterations);
    if (best_history.size() > window) {
      const double before = best_history[best_history.size() - 1 - window];
      const double gain = result.value - before;
      const bool both_rejected = !std::isfinite(before) && !std::isfinite(result.value);
      if (both_rejected || (std::isfinite(before) && gain < settings.tolerance)) {
        result.stalled = true;
        break;
      }
    }
  }
  return result;
}

}  // namespace mogp

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

// Synthetic stand-in for a plasma-treatment adhesive-bonding process.
//
// With unit-scaled power p, torch speed s, torch distance h, passes n and
// time-to-bonding t, and pre-processing flag pre in {0,1}:
//
//   dose        D  = p (1 - 0.6 s)(1 - 0.5 h)(0.4 + 0.6 sqrt(n))
//   activation  A  = clamp(0.35 + 0.15 pre + 0.65 (1 - exp(-4D)) exp(-1.2 t), 0, 1)
//   contact angle  CA = clamp(mu_CA (1 + gamma * z), 1, 120),  mu_CA = 95 (1 - A) + 5
//   strength    TS = 42 max(0, 1 - CA / 105)  [MPa]
//   damage         D > 0.88
//   failure        adhesion if A < 0.60, substrate if TS >= 34, cohesive otherwise
//   cost        PC = 0.6 + 0.7 pre + 0.004 passes (100 / speed_mm_s)  [euros]
//
// z is a standard normal draw, so gamma is the contact-angle standard
// deviation relative to its mean. Noise enters only through the contact angle.

#include <cstdint>
#include <vector>

#include "mogp/domain.hpp"
#include "mogp/rng.hpp"

namespace mogp {

struct SimulatorSettings {
  double gamma = 0.30;
  std::uint64_t seed = 0;
  double burn_threshold = 0.88;
  double adhesion_threshold = 0.60;
  double substrate_threshold = 34.0;
  double base_cost = 0.6;
  double preprocessing_cost = 0.7;
  double pass_cost = 0.004;

  void validate() const;
};

/// Noise-free intermediate quantities, exposed for tests and diagnostics.
struct SimulatorState {
  double dose = 0.0;
  double activation = 0.0;
  double mean_contact_angle = 0.0;
};

SimulatorState simulator_state(const Configuration& config, const SimulatorSettings& settings,
                               const DesignSpace& space = DesignSpace::bonding());

/// One replication with the given standard-normal draw.
Outcome simulate_once(const Configuration& config, const SimulatorSettings& settings, double noise_draw,
                      const DesignSpace& space = DesignSpace::bonding());

/// r replications drawing noise from rng in call order.
std::vector<Outcome> simulate(const Configuration& config, int r, const SimulatorSettings& settings, Rng& rng,
                              const DesignSpace& space = DesignSpace::bonding());

/// A simulator with its own noise stream and an outcome counter; this is the
/// "expensive evaluation" the optimizers are budgeted against.
class Simulator {
 public:
  explicit Simulator(SimulatorSettings settings, DesignSpace space = DesignSpace::bonding());

  std::vector<Outcome> evaluate(const Configuration& config, int r);
  /// Number of single-replication outcomes produced so far.
  std::uint64_t calls() const { return calls_; }
  const SimulatorSettings& settings() const { return settings_; }
  const DesignSpace& space() const { return space_; }

 private:
  SimulatorSettings settings_;
  DesignSpace space_;
  Rng rng_;
  std::uint64_t calls_ = 0;
};

}  // namespace mogp

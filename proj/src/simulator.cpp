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

#include "mogp/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "mogp/errors.hpp"

namespace mogp {

void SimulatorSettings::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("simulator gamma must be >= 0");
  if (!(burn_threshold > 0.0 && burn_threshold <= 1.0)) throw DomainError("burn threshold must lie in (0, 1]");
  if (!(adhesion_threshold >= 0.0 && adhesion_threshold <= 1.0)) {
    throw DomainError("adhesion threshold must lie in [0, 1]");
  }
  if (!(substrate_threshold >= 0.0 && substrate_threshold <= 42.0)) {
    throw DomainError("substrate threshold must lie in [0, 42] MPa");
  }
  if (base_cost < 0.0 || preprocessing_cost < 0.0 || pass_cost < 0.0) {
    throw DomainError("cost coefficients must be >= 0");
  }
}

SimulatorState simulator_state(const Configuration& config, const SimulatorSettings& settings,
                               const DesignSpace& space) {
  const auto u = space.encode(config);
  const double pre = config[0];
  const double p = u[1], s = u[2], h = u[3], n = u[4], t = u[5];
  SimulatorState st;
  st.dose = p * (1.0 - 0.6 * s) * (1.0 - 0.5 * h) * (0.4 + 0.6 * std::sqrt(n));
  st.activation =
      std::clamp(0.35 + 0.15 * pre + 0.65 * (1.0 - std::exp(-4.0 * st.dose)) * std::exp(-1.2 * t), 0.0, 1.0);
  st.mean_contact_angle = 95.0 * (1.0 - st.activation) + 5.0;
  (void)settings;
  return st;
}

Outcome simulate_once(const Configuration& config, const SimulatorSettings& settings, double noise_draw,
                      const DesignSpace& space) {
  const auto st = simulator_state(config, settings, space);
  const double ca = std::clamp(st.mean_contact_angle * (1.0 + settings.gamma * noise_draw), 1.0, 120.0);
  Outcome o;
  o.strength = 42.0 * std::max(0.0, 1.0 - ca / 105.0);
  o.visual_damage = st.dose > settings.burn_threshold;
  if (st.activation < settings.adhesion_threshold) {
    o.failure_mode = FailureMode::adhesion;
  } else if (o.strength >= settings.substrate_threshold) {
    o.failure_mode = FailureMode::substrate;
  } else {
    o.failure_mode = FailureMode::cohesive;
  }
  const double pre = config[0];
  const double passes = config[4];
  const double speed = config[2];
  o.cost = settings.base_cost + settings.preprocessing_cost * pre + settings.pass_cost * passes * (100.0 / speed);
  return o;
}

std::vector<Outcome> simulate(const Configuration& config, int r, const SimulatorSettings& settings, Rng& rng,
                              const DesignSpace& space) {
  if (r < 1) throw DomainError("simulate: replications must be >= 1");
  space.validate(config);
  std::vector<Outcome> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) out.push_back(simulate_once(config, settings, rng.normal(), space));
  return out;
}

Simulator::Simulator(SimulatorSettings settings, DesignSpace space)
    : settings_(settings), space_(std::move(space)), rng_(derive_seed(settings.seed, "simulator")) {
  settings_.validate();
}

std::vector<Outcome> Simulator::evaluate(const Configuration& config, int r) {
  auto out = simulate(config, r, settings_, rng_, space_);
  calls_ += out.size();
  return out;
}

}  // namespace mogp

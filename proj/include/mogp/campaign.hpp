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

// The sequential constrained multi-objective loop:
//
//   1. Latin hypercube initial design, every point replicated r times.
//   2. Each iteration: draw a weight vector, normalize and scalarize all
//      observations per replication, fit stochastic kriging on the scalarized
//      means with their variance-of-mean as noise, fit the logistic
//      feasibility model on majority labels, and maximize
//      CMEI(x) = MEI(x) * P(feasible | x) with a particle swarm.
//   3. The maximizer is evaluated (r replications) and the loop repeats until
//      k + I configurations have been evaluated.
//
// Campaign exposes this as an ask/tell state machine so the expensive
// evaluation can happen anywhere (a simulator, a lab bench, a web form).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mogp/acquisition.hpp"
#include "mogp/domain.hpp"
#include "mogp/errors.hpp"
#include "mogp/feasibility.hpp"
#include "mogp/metrics.hpp"
#include "mogp/scalarization.hpp"
#include "mogp/surrogate.hpp"

namespace mogp {

inline constexpr int kCampaignSchemaVersion = 1;

/// Thrown by suggest() once k + I configurations have been evaluated.
class BudgetExhausted : public StateError {
 public:
  using StateError::StateError;
};

struct CampaignSettings {
  DesignSpace space = DesignSpace::bonding();
  int init_size = 20;
  int iterations = 40;
  int replications = 5;
  double rho = 0.05;
  double ridge = 1e-3;
  int gp_restarts = 10;
  PsoSettings pso;  // pso.seed is replaced by a per-iteration derived seed
  std::uint64_t seed = 1;
  ObjectiveVector reference = kDefaultReference;

  int budget() const { return init_size + iterations; }
  /// Throws DomainError (k >= 2, I >= 0, r >= 1, rho >= 0, ...).
  void validate() const;
};

/// What the models looked like when the last suggestion was made.
struct ModelSummary {
  int iteration = 0;
  WeightVector weights;
  NormalizationBounds bounds;
  KernelParams kernel;
  double kernel_mean = 0.0;
  double log_likelihood = 0.0;
  LrModel feasibility;
  std::vector<double> incumbent;  // unit-scaled x_min
  double incumbent_prediction = 0.0;
  double acquisition = 0.0;
  int pso_iterations = 0;
};

enum class Phase { design, optimizing, exhausted };
std::string_view to_string(Phase phase);

class Campaign {
 public:
  /// Generates the LHS design from settings.seed; nothing is evaluated yet.
  static Campaign initialize(CampaignSettings settings);
  /// Same, but with a caller-supplied initial design (shared across
  /// algorithms in benchmarks).
  static Campaign with_design(CampaignSettings settings, std::vector<Configuration> design);

  const CampaignSettings& settings() const { return settings_; }
  Phase phase() const;
  int iteration() const { return iteration_; }
  const std::vector<Configuration>& design() const { return design_; }
  /// Initial-design points that have not been told yet, in design order.
  std::vector<Configuration> pending_design() const;
  const std::optional<Configuration>& pending_suggestion() const { return pending_; }
  const std::vector<ReplicatedObservation>& observations() const { return observations_; }
  const std::optional<ModelSummary>& last_model() const { return last_model_; }
  bool budget_exhausted() const { return iteration_ >= settings_.iterations; }

  /// Next infill point. Requires the whole initial design to be told
  /// (StateError otherwise) and budget left (BudgetExhausted otherwise).
  /// Repeated calls before tell() return the cached suggestion.
  const Configuration& suggest();

  /// Records r outcomes for the pending suggestion or an untold design
  /// point. DomainError for an unknown configuration or a wrong replication
  /// count.
  const ReplicatedObservation& tell(const Configuration& config, std::vector<Outcome> outcomes);

  /// Pareto front of the majority-feasible sample means.
  FrontReport current_front() const;
  /// Hypervolume of the accumulated archive after each told configuration.
  std::vector<double> hv_history() const;

  std::string serialize() const;
  /// FormatError on a corrupt document or schema version mismatch.
  static Campaign deserialize(std::string_view text);
  /// Writes atomically (temporary file + rename). Throws std::runtime_error
  /// on I/O failure.
  void save(const std::filesystem::path& path) const;
  static Campaign load(const std::filesystem::path& path);

 private:
  Campaign() = default;
  bool matches(const Configuration& a, const Configuration& b) const;

  CampaignSettings settings_;
  std::vector<Configuration> design_;
  std::vector<bool> design_told_;
  std::vector<ReplicatedObservation> observations_;
  int iteration_ = 0;
  std::optional<Configuration> pending_;
  std::optional<ModelSummary> last_model_;
};

/// Expensive evaluation: r outcomes for one configuration.
using Evaluator = std::function<std::vector<Outcome>(const Configuration&)>;

struct RunResult {
  Campaign campaign;
  std::vector<double> hv_history;
  std::uint64_t outcome_records = 0;
};

/// Drives initialize / tell / suggest / tell ... until the budget is spent.
RunResult run(const CampaignSettings& settings, const Evaluator& evaluator);
RunResult run(const CampaignSettings& settings, std::vector<Configuration> design, const Evaluator& evaluator);

/// One iteration's model fit and infill selection on a set of observations.
/// Exposed for tests; Campaign::suggest is a thin wrapper around it.
struct InfillDecision {
  Configuration config;
  ModelSummary summary;
};
InfillDecision select_infill(const CampaignSettings& settings, std::span<const ReplicatedObservation> observations,
                             int iteration);

/// Index of x_min: lowest scalarized mean among majority-feasible points; if
/// none is majority-feasible, highest pf with ties to the lower mean.
std::size_t select_incumbent(std::span<const double> scalarized_means, std::span<const double> pf,
                             const std::vector<bool>& majority_feasible);

}  // namespace mogp

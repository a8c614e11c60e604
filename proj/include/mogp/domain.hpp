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

// Core domain types for the plasma-bonding design problem: the design space,
// configurations, measured outcomes, replicated observations and Pareto
// dominance in minimization space (cost, -strength).

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mogp {

enum class VariableKind { binary, integer, continuous };

struct VariableSpec {
  std::string id;     // v1..v6
  std::string label;  // operator-facing name
  VariableKind kind = VariableKind::continuous;
  double lower = 0.0;
  double upper = 1.0;
  std::string unit;
};

/// A configuration in natural units (W, mm/s, cm, passes, min). Binary
/// dimensions hold 0 or 1, integer dimensions hold whole numbers.
struct Configuration {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

class DesignSpace {
 public:
  DesignSpace() = default;
  explicit DesignSpace(std::vector<VariableSpec> variables);

  /// The six plasma-treatment settings: pre-processing (yes/no), power,
  /// torch speed, torch distance, number of passes, time to bonding.
  static DesignSpace bonding();

  std::size_t dimension() const { return variables_.size(); }
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const VariableSpec& variable(std::size_t i) const { return variables_.at(i); }

  /// Affine min-max map to [0,1]^d. Throws DomainError naming the first
  /// variable that is out of bounds (or not integral / not binary).
  std::vector<double> encode(const Configuration& config) const;

  /// Inverse of encode. Unit values are clipped to [0,1]; binary dimensions
  /// map to 1 iff u >= 0.5 and integer dimensions round half-up.
  Configuration decode(std::span<const double> unit) const;

  /// Apply the binary/integer rounding rules to natural-unit values.
  Configuration round(std::vector<double> natural) const;

  /// Throws DomainError if the configuration does not belong to the space.
  void validate(const Configuration& config) const;
  bool contains(const Configuration& config) const;

  /// Index of the variable with the given id, or throws DomainError.
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const DesignSpace&, const DesignSpace&);

 private:
  std::vector<VariableSpec> variables_;
};

bool operator==(const VariableSpec& a, const VariableSpec& b);

/// Objective values in minimization space: production cost and negated
/// tensile strength.
struct ObjectiveVector {
  double cost = 0.0;
  double neg_strength = 0.0;

  static constexpr std::size_t size() { return 2; }
  double operator[](std::size_t j) const { return j == 0 ? cost : neg_strength; }
  std::array<double, 2> as_array() const { return {cost, neg_strength}; }
  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

enum class FailureMode { adhesion, cohesive, substrate };

std::string_view to_string(FailureMode mode);
/// Parses "adhesion" / "cohesive" / "substrate"; throws DomainError listing
/// the valid values otherwise.
FailureMode parse_failure_mode(std::string_view text);

struct Outcome {
  double strength = 0.0;  // MPa
  double cost = 0.0;      // euros
  FailureMode failure_mode = FailureMode::cohesive;
  bool visual_damage = false;

  bool feasible() const { return !visual_damage && failure_mode != FailureMode::adhesion; }
  ObjectiveVector objectives() const { return {cost, -strength}; }
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// All replications measured at one configuration plus their summary
/// statistics. Built only through from_outcomes so the statistics always
/// agree with the outcome list.
class ReplicatedObservation {
 public:
  static ReplicatedObservation from_outcomes(Configuration config, std::vector<Outcome> outcomes);

  const Configuration& config() const { return config_; }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::size_t replications() const { return outcomes_.size(); }
  const ObjectiveVector& mean_objectives() const { return mean_; }
  /// Unbiased sample variances per objective; zero when r = 1.
  const ObjectiveVector& var_objectives() const { return var_; }
  double pf() const { return pf_; }
  bool majority_feasible() const { return majority_feasible_; }

 private:
  Configuration config_;
  std::vector<Outcome> outcomes_;
  ObjectiveVector mean_;
  ObjectiveVector var_;
  double pf_ = 0.0;
  bool majority_feasible_ = false;
};

/// Feasibility constraint 0.5 - Pf <= 0. A tie at exactly one half is feasible.
bool feasible_fraction_ok(double pf);

/// a is no worse in every objective and strictly better in at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);
/// a is strictly better in every objective.
bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Indices (ascending) of the points not dominated by any other point.
/// Duplicates of a non-dominated point are all retained.
std::vector<std::size_t> pareto_filter(std::span<const ObjectiveVector> points);

/// Sample mean and unbiased sample variance (0 for fewer than two values).
struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;
};
MeanVar sample_mean_var(std::span<const double> values);

}  // namespace mogp

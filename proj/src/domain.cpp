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

#include "mogp/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mogp/errors.hpp"
#include "mogp/simd/kernels.hpp"

namespace mogp {

namespace {

std::string describe(const VariableSpec& v) {
  std::ostringstream os;
  os << v.id << " (" << v.label << ")";
  return os.str();
}

double round_half_up(double x) { return std::floor(x + 0.5); }

}  // namespace

DesignSpace::DesignSpace(std::vector<VariableSpec> variables) : variables_(std::move(variables)) {
  for (auto& v : variables_) {
    if (v.kind == VariableKind::binary) {
      v.lower = 0.0;
      v.upper = 1.0;
    } else if (!(v.lower < v.upper) || !std::isfinite(v.lower) || !std::isfinite(v.upper)) {
      throw DomainError("variable " + describe(v) + ": lower bound must be below upper bound");
    }
  }
}

DesignSpace DesignSpace::bonding() {
  return DesignSpace({
      {"v1", "Pre-processing", VariableKind::binary, 0.0, 1.0, "yes/no"},
      {"v2", "Power", VariableKind::continuous, 300.0, 500.0, "W"},
      {"v3", "Torch speed", VariableKind::continuous, 5.0, 250.0, "mm/s"},
      {"v4", "Torch distance", VariableKind::continuous, 0.2, 2.0, "cm"},
      {"v5", "Passes", VariableKind::integer, 1.0, 50.0, "passes"},
      {"v6", "Time to bonding", VariableKind::continuous, 1.0, 120.0, "min"},
  });
}

void DesignSpace::validate(const Configuration& config) const {
  if (config.size() != dimension()) {
    throw DomainError("configuration has " + std::to_string(config.size()) + " values, expected " +
                      std::to_string(dimension()));
  }
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto& v = variables_[i];
    const double x = config[i];
    if (!std::isfinite(x) || x < v.lower || x > v.upper) {
      std::ostringstream os;
      os << "variable " << describe(v) << " = " << x << " outside [" << v.lower << ", " << v.upper << "]";
      throw DomainError(os.str());
    }
    if (v.kind == VariableKind::binary && x != 0.0 && x != 1.0) {
      throw DomainError("variable " + describe(v) + " must be 0 or 1");
    }
    if (v.kind == VariableKind::integer && x != std::floor(x)) {
      throw DomainError("variable " + describe(v) + " must be a whole number");
    }
  }
}

bool DesignSpace::contains(const Configuration& config) const {
  try {
    validate(config);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<double> DesignSpace::encode(const Configuration& config) const {
  validate(config);
  std::vector<double> unit(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto& v = variables_[i];
    unit[i] = (config[i] - v.lower) / (v.upper - v.lower);
  }
  return unit;
}

Configuration DesignSpace::decode(std::span<const double> unit) const {
  if (unit.size() != dimension()) {
    throw DomainError("unit vector has " + std::to_string(unit.size()) + " values, expected " +
                      std::to_string(dimension()));
  }
  std::vector<double> natural(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto& v = variables_[i];
    const double u = std::clamp(unit[i], 0.0, 1.0);
    if (v.kind == VariableKind::binary) {
      natural[i] = u >= 0.5 ? 1.0 : 0.0;
    } else {
      natural[i] = v.lower + u * (v.upper - v.lower);
    }
  }
  return round(std::move(natural));
}

Configuration DesignSpace::round(std::vector<double> natural) const {
  for (std::size_t i = 0; i < std::min(natural.size(), dimension()); ++i) {
    const auto& v = variables_[i];
    if (v.kind == VariableKind::binary) {
      natural[i] = natural[i] >= 0.5 ? 1.0 : 0.0;
    } else if (v.kind == VariableKind::integer) {
      natural[i] = std::clamp(round_half_up(natural[i]), std::ceil(v.lower), std::floor(v.upper));
    } else {
      natural[i] = std::clamp(natural[i], v.lower, v.upper);
    }
  }
  return Configuration{std::move(natural)};
}

std::size_t DesignSpace::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].id == id) return i;
  }
  throw DomainError("unknown variable '" + std::string(id) + "'");
}

bool operator==(const VariableSpec& a, const VariableSpec& b) {
  return a.id == b.id && a.label == b.label && a.kind == b.kind && a.lower == b.lower &&
         a.upper == b.upper && a.unit == b.unit;
}

bool operator==(const DesignSpace& a, const DesignSpace& b) { return a.variables_ == b.variables_; }

std::string_view to_string(FailureMode mode) {
  switch (mode) {
    case FailureMode::adhesion:
      return "adhesion";
    case FailureMode::cohesive:
      return "cohesive";
    case FailureMode::substrate:
      return "substrate";
  }
  return "cohesive";
}

FailureMode parse_failure_mode(std::string_view text) {
  if (text == "adhesion") return FailureMode::adhesion;
  if (text == "cohesive") return FailureMode::cohesive;
  if (text == "substrate") return FailureMode::substrate;
  throw DomainError("unknown failure_mode '" + std::string(text) +
                    "' (valid values: adhesion, cohesive, substrate)");
}

MeanVar sample_mean_var(std::span<const double> values) {
  MeanVar out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.variance = ss / static_cast<double>(values.size() - 1);
  return out;
}

bool feasible_fraction_ok(double pf) { return 0.5 - pf <= 0.0; }

ReplicatedObservation ReplicatedObservation::from_outcomes(Configuration config,
                                                           std::vector<Outcome> outcomes) {
  if (outcomes.empty()) throw DomainError("an observation needs at least one replication");
  ReplicatedObservation obs;
  std::vector<double> costs, negs;
  std::size_t feasible = 0;
  for (const auto& o : outcomes) {
    if (!std::isfinite(o.strength) || !std::isfinite(o.cost)) {
      throw DomainError("outcome strength and cost must be finite");
    }
    costs.push_back(o.cost);
    negs.push_back(-o.strength);
    if (o.feasible()) ++feasible;
  }
  const auto c = sample_mean_var(costs);
  const auto s = sample_mean_var(negs);
  obs.mean_ = {c.mean, s.mean};
  obs.var_ = {c.variance, s.variance};
  obs.pf_ = static_cast<double>(feasible) / static_cast<double>(outcomes.size());
  obs.majority_feasible_ = feasible_fraction_ok(obs.pf_);
  obs.config_ = std::move(config);
  obs.outcomes_ = std::move(outcomes);
  return obs;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.cost <= b.cost && a.neg_strength <= b.neg_strength &&
         (a.cost < b.cost || a.neg_strength < b.neg_strength);
}

bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.cost < b.cost && a.neg_strength < b.neg_strength;
}

std::vector<std::size_t> pareto_filter(std::span<const ObjectiveVector> points) {
  std::vector<double> f1(points.size()), f2(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    f1[i] = points[i].cost;
    f2[i] = points[i].neg_strength;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (simd::count_dominating(f1, f2, f1[i], f2[i]) == 0) kept.push_back(i);
  }
  return kept;
}

}  // namespace mogp

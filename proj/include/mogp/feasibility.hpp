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

#include <span>
#include <vector>

#include "mogp/domain.hpp"

namespace mogp {

/// Logistic model P(feasible | x) = 1 / (1 + exp(-(beta0 + beta . x))) on
/// unit-scaled inputs.
struct LrModel {
  double beta0 = 0.0;
  std::vector<double> beta;
  bool converged = false;
  int iterations_used = 0;
  /// Penalized log-likelihood after each Newton step (non-decreasing).
  std::vector<double> objective_trace;
};

/// 1 iff at least half of the replications are feasible.
int majority_label(std::span<const Outcome> outcomes);

/// Ridge-penalized maximum likelihood (penalty reg * |beta|^2, intercept not
/// penalized) by Newton-Raphson / IRLS with step halving. Converged when the
/// gradient norm drops below 1e-8; at most 200 iterations.
LrModel fit_lr(std::span<const std::vector<double>> inputs, std::span<const int> labels, double reg = 1e-3);

double predict_pf(const LrModel& model, std::span<const double> x);

/// Penalized log-likelihood of the data under the model.
double penalized_log_likelihood(const LrModel& model, std::span<const std::vector<double>> inputs,
                                std::span<const int> labels, double reg);

}  // namespace mogp

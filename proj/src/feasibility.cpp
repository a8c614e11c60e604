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

#include "mogp/feasibility.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "mogp/errors.hpp"

namespace mogp {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kGradientTolerance = 1e-8;

double linear_term(double beta0, const Eigen::VectorXd& beta, std::span<const double> x) {
  double z = beta0;
  for (Eigen::Index k = 0; k < beta.size(); ++k) z += beta(k) * x[static_cast<std::size_t>(k)];
  return z;
}

double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

// Parameters packed as (beta0, beta_1..beta_d).
double objective(const Eigen::VectorXd& w, std::span<const std::vector<double>> x, std::span<const int> y,
                 double reg) {
  const auto d = w.size() - 1;
  const Eigen::VectorXd beta = w.tail(d);
  double ll = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double z = linear_term(w(0), beta, x[i]);
    ll += y[i] * z - softplus(z);
  }
  return ll - reg * beta.squaredNorm();
}

}  // namespace

int majority_label(std::span<const Outcome> outcomes) {
  if (outcomes.empty()) throw DomainError("majority_label: no outcomes");
  std::size_t feasible = 0;
  for (const auto& o : outcomes) feasible += o.feasible() ? 1 : 0;
  return feasible_fraction_ok(static_cast<double>(feasible) / static_cast<double>(outcomes.size())) ? 1 : 0;
}

LrModel fit_lr(std::span<const std::vector<double>> inputs, std::span<const int> labels, double reg) {
  if (inputs.empty()) throw DomainError("fit_lr: need at least one sample");
  if (inputs.size() != labels.size()) throw DomainError("fit_lr: inputs and labels differ in length");
  if (reg < 0.0 || !std::isfinite(reg)) throw DomainError("fit_lr: ridge weight must be finite and >= 0");
  const auto d = static_cast<Eigen::Index>(inputs.front().size());
  if (d < 1) throw DomainError("fit_lr: inputs must have at least one dimension");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (static_cast<Eigen::Index>(inputs[i].size()) != d) throw DomainError("fit_lr: ragged input rows");
    if (labels[i] != 0 && labels[i] != 1) throw DomainError("fit_lr: labels must be 0 or 1");
  }

  const Eigen::Index p = d + 1;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  LrModel model;
  double current = objective(w, inputs, labels, reg);
  model.objective_trace.push_back(current);

  for (int it = 0; it < kMaxIterations; ++it) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(p);
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(p, p);
    Eigen::VectorXd row(p);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      row(0) = 1.0;
      for (Eigen::Index k = 0; k < d; ++k) row(k + 1) = inputs[i][static_cast<std::size_t>(k)];
      const double mu = logistic(w.dot(row));
      grad += (labels[i] - mu) * row;
      hess.noalias() += (mu * (1.0 - mu)) * row * row.transpose();
    }
    grad.tail(d) -= 2.0 * reg * w.tail(d);
    hess.diagonal().tail(d).array() += 2.0 * reg;
    model.iterations_used = it;
    if (grad.norm() < kGradientTolerance) {
      model.converged = true;
      break;
    }
    // The intercept is unpenalized, so a one-class sample leaves the Hessian
    // near-singular in that direction; a tiny ridge keeps the solve finite.
    hess.diagonal().array() += 1e-12;
    const Eigen::VectorXd step = hess.ldlt().solve(grad);

    double t = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 40; ++ls) {
      const Eigen::VectorXd trial = w + t * step;
      const double value = objective(trial, inputs, labels, reg);
      if (std::isfinite(value) && value >= current) {
        w = trial;
        current = value;
        improved = true;
        break;
      }
      t *= 0.5;
    }
    model.objective_trace.push_back(current);
    model.iterations_used = it + 1;
    if (!improved) break;
  }
  if (!model.converged) {
    // Re-check the gradient at the final point.
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd row(p);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      row(0) = 1.0;
      for (Eigen::Index k = 0; k < d; ++k) row(k + 1) = inputs[i][static_cast<std::size_t>(k)];
      grad += (labels[i] - logistic(w.dot(row))) * row;
    }
    grad.tail(d) -= 2.0 * reg * w.tail(d);
    model.converged = grad.norm() < kGradientTolerance;
  }

  model.beta0 = w(0);
  model.beta.assign(w.data() + 1, w.data() + p);
  return model;
}

double predict_pf(const LrModel& model, std::span<const double> x) {
  if (x.size() != model.beta.size()) throw DomainError("predict_pf: dimension mismatch");
  double z = model.beta0;
  for (std::size_t k = 0; k < x.size(); ++k) z += model.beta[k] * x[k];
  return logistic(z);
}

double penalized_log_likelihood(const LrModel& model, std::span<const std::vector<double>> inputs,
                                std::span<const int> labels, double reg) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(model.beta.size() + 1));
  w(0) = model.beta0;
  for (std::size_t k = 0; k < model.beta.size(); ++k) w(static_cast<Eigen::Index>(k + 1)) = model.beta[k];
  return objective(w, inputs, labels, reg);
}

}  // namespace mogp

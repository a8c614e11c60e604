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

// Stochastic kriging with a Gaussian kernel.
//
// The model is fit to scalarized sample means Y at unit-scaled inputs X with a
// fixed heteroscedastic noise diagonal Sigma_eps = Var/r. The kernel is
//
//   k(a, b) = sigma^2 * exp(-sum_k (theta_k * |a_k - b_k|)^2)
//
// with process variance sigma^2 and inverse length-scales theta_k. Prediction:
//
//   mean(x*) = mu + k_* (K_n + Sigma_eps)^-1 (Y - mu)
//   sd(x*)^2 = k_** - k_* K_n^-1 k_*^T          (ordinary kriging, noise-free K_n)
//
// where mu is the mean of Y. Hyperparameters (log sigma^2, log theta) are fit
// by maximizing the Gaussian log marginal likelihood on standardized outputs
// with multi-start BFGS and an analytic gradient.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "mogp/domain.hpp"

namespace mogp {

struct KernelParams {
  double process_variance = 1.0;
  std::vector<double> inverse_lengthscales;

  void validate(std::size_t dimension) const;
};

/// Throws DomainError on dimension mismatch.
double kernel_eval(std::span<const double> a, std::span<const double> b, const KernelParams& params);

struct TrainingSet {
  std::vector<std::vector<double>> inputs;  // unit-scaled rows
  std::vector<double> responses;
  std::vector<double> noise;  // Var(x_i) / r_i

  std::size_t size() const { return responses.size(); }
  std::size_t dimension() const { return inputs.empty() ? 0 : inputs.front().size(); }
  /// Throws DomainError on ragged rows, non-finite values or negative noise.
  void validate() const;
};

struct Prediction {
  double mean = 0.0;
  double ok_sd = 0.0;
};

struct FitOptions {
  int restarts = 10;
  double log_variance_lower = -6.0;
  double log_variance_upper = 6.0;
  double log_theta_lower = -4.0;
  double log_theta_upper = 4.0;
  int max_iterations = 100;
};

/// Diagonal jitter starts at this multiple of sigma^2 and grows x10 on each
/// failed Cholesky factorization up to kMaxJitter.
inline constexpr double kInitialJitter = 1e-8;
inline constexpr double kMaxJitter = 1e-2;

/// Log marginal likelihood of Y - mean(Y) under N(0, K_n + Sigma_eps + jitter).
/// Throws ModelError if the covariance cannot be factorized.
double log_marginal_likelihood(const TrainingSet& training, const KernelParams& params);

/// Gradient of log_marginal_likelihood with respect to
/// (log sigma^2, log theta_1, ..., log theta_d).
std::vector<double> log_marginal_likelihood_gradient(const TrainingSet& training,
                                                     const KernelParams& params);

class StochasticKriging {
 public:
  /// An unfitted model; predict() throws StateError.
  StochasticKriging() = default;

  /// Maximum-likelihood fit. Deterministic for a given seed. A single
  /// training point uses the prior defaults (sigma^2 = output scale, theta = 1).
  static StochasticKriging fit(TrainingSet training, std::uint64_t seed, const FitOptions& options = {});

  /// Condition on the data with fixed hyperparameters (original output scale).
  static StochasticKriging with_params(TrainingSet training, KernelParams params);

  bool fitted() const { return fitted_; }
  Prediction predict(std::span<const double> x) const;

  /// Hyperparameters on the original output scale.
  KernelParams params() const;
  double mean_constant() const { return mean_; }
  double log_likelihood() const { return log_likelihood_; }
  /// Diagonal jitter actually added to K_n + Sigma_eps (original scale).
  double jitter() const { return jitter_ * scale_ * scale_; }
  /// Diagonal jitter added to the noise-free K_n used by ok_sd.
  double variance_jitter() const { return variance_jitter_ * scale_ * scale_; }
  /// (K_n + Sigma_eps + jitter I)^-1 (Y - mean), original scale.
  std::vector<double> weights() const;
  const TrainingSet& training() const { return training_; }
  /// Best log-likelihood after each restart (non-decreasing).
  const std::vector<double>& restart_trace() const { return restart_trace_; }

 private:
  void condition(double log_variance_std, std::span<const double> log_theta);

  bool fitted_ = false;
  TrainingSet training_;
  Eigen::MatrixXd columns_;  // n x d, column-major, unit inputs
  double mean_ = 0.0;
  double scale_ = 1.0;  // output standard deviation used for standardization
  double variance_std_ = 1.0;
  Eigen::VectorXd theta_;
  Eigen::VectorXd weights_std_;
  Eigen::LLT<Eigen::MatrixXd> noise_free_chol_;
  double jitter_ = 0.0;
  double variance_jitter_ = 0.0;
  double log_likelihood_ = 0.0;
  std::vector<double> restart_trace_;
};

/// Intrinsic noise diagonal: for each observation, the sample variance of
/// its per-replication scalarized values divided by r (0 when r = 1).
std::vector<double> noise_diagonal(std::span<const ReplicatedObservation> observations,
                                   const std::function<double(const ObjectiveVector&)>& scalarizer);

}  // namespace mogp

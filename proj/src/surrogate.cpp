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

#include "mogp/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "mogp/errors.hpp"
#include "mogp/rng.hpp"
#include "mogp/simd/kernels.hpp"

namespace mogp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd to_columns(const TrainingSet& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  const auto d = static_cast<Eigen::Index>(t.dimension());
  MatrixXd cols(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) cols(i, k) = t.inputs[i][k];
  }
  return cols;
}

std::span<const double> as_span(const MatrixXd& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

// Fills out(i) = variance * exp(-sum_k (theta_k (x_k - X_ik))^2).
void kernel_row(const MatrixXd& cols, std::span<const double> x, double variance,
                const VectorXd& theta, double* out) {
  const auto n = static_cast<std::size_t>(cols.rows());
  std::span<double> dst(out, n);
  simd::weighted_sq_distances(x, {theta.data(), static_cast<std::size_t>(theta.size())}, as_span(cols), n, dst);
  for (double& v : dst) v = variance * std::exp(-v);
}

MatrixXd gram(const MatrixXd& cols, double variance, const VectorXd& theta) {
  const auto n = cols.rows();
  const auto d = cols.cols();
  MatrixXd k(n, n);
  std::vector<double> x(d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < d; ++c) x[c] = cols(i, c);
    kernel_row(cols, x, variance, theta, k.col(i).data());
  }
  // Exact symmetry regardless of the kernel variant used.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) k(i, j) = k(j, i);
  }
  return k;
}

struct Factor {
  Eigen::LLT<MatrixXd> llt;
  double jitter = 0.0;
};

bool healthy(const Eigen::LLT<MatrixXd>& llt) {
  if (llt.info() != Eigen::Success) return false;
  const auto diag = llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (!(diag(i) > 0.0) || !std::isfinite(diag(i))) return false;
  }
  return true;
}

// Cholesky of base + jitter*I with jitter escalating from 1e-8 to 1e-2 times
// the process variance.
std::optional<Factor> factorize(const MatrixXd& base, double variance) {
  const auto n = base.rows();
  for (double rel = kInitialJitter; rel <= kMaxJitter * 1.0000001; rel *= 10.0) {
    Factor f;
    f.jitter = rel * variance;
    MatrixXd c = base;
    c.diagonal().array() += f.jitter;
    f.llt.compute(c);
    if (healthy(f.llt)) return f;
  }
  (void)n;
  return std::nullopt;
}

struct Likelihood {
  double value = 0.0;
  VectorXd gradient;  // d/d(log variance, log theta)
};

// Core likelihood on whatever output scale the caller supplies.
Likelihood likelihood(const MatrixXd& cols, const VectorXd& resid, const VectorXd& noise,
                      double log_variance, const VectorXd& log_theta, bool with_gradient) {
  const double variance = std::exp(log_variance);
  const VectorXd theta = log_theta.array().exp();
  const MatrixXd k = gram(cols, variance, theta);
  MatrixXd c = k;
  c.diagonal() += noise;
  const auto factor = factorize(c, variance);
  if (!factor) throw ModelError("covariance matrix is not positive definite even after maximum jitter");

  const auto n = cols.rows();
  const VectorXd alpha = factor->llt.solve(resid);
  double log_det = 0.0;
  const auto diag = factor->llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < n; ++i) log_det += 2.0 * std::log(diag(i));

  Likelihood out;
  out.value = -0.5 * resid.dot(alpha) - 0.5 * log_det - 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
  if (!with_gradient) return out;

  const MatrixXd c_inv = factor->llt.solve(MatrixXd::Identity(n, n));
  const MatrixXd w = alpha * alpha.transpose() - c_inv;
  const auto d = cols.cols();
  out.gradient = VectorXd::Zero(d + 1);
  // dC/dlog(variance) = K + jitter*I, since the jitter scales with the variance.
  out.gradient(0) = 0.5 * ((w.array() * k.array()).sum() + factor->jitter * w.trace());
  for (Eigen::Index q = 0; q < d; ++q) {
    const double t2 = theta(q) * theta(q);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double delta = cols(i, q) - cols(j, q);
        acc += w(i, j) * k(i, j) * (-2.0 * t2 * delta * delta);
      }
    }
    out.gradient(q + 1) = 0.5 * acc;
  }
  return out;
}

VectorXd log_theta_of(const KernelParams& p) {
  VectorXd lt(p.inverse_lengthscales.size());
  for (std::size_t k = 0; k < p.inverse_lengthscales.size(); ++k) {
    // theta = 0 is legal (flat dimension); clamp its log to something finite.
    lt(static_cast<Eigen::Index>(k)) = std::log(std::max(p.inverse_lengthscales[k], 1e-300));
  }
  return lt;
}

VectorXd residuals(const TrainingSet& t, double mean) {
  VectorXd r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r(static_cast<Eigen::Index>(i)) = t.responses[i] - mean;
  return r;
}

VectorXd noise_vector(const TrainingSet& t, double scale2) {
  VectorXd v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v(static_cast<Eigen::Index>(i)) = t.noise[i] / scale2;
  return v;
}

double mean_of(const std::vector<double>& y) {
  double s = 0.0;
  for (double v : y) s += v;
  return s / static_cast<double>(y.size());
}

double logistic(double u) { return 1.0 / (1.0 + std::exp(-u)); }

// Box-constrained parameters phi in [lo, hi] reached through
// phi = lo + (hi - lo) * logistic(u), so BFGS can run unconstrained in u.
struct BoxMap {
  VectorXd lo, hi;

  VectorXd to_phi(const VectorXd& u) const {
    VectorXd phi(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) phi(i) = lo(i) + (hi(i) - lo(i)) * logistic(u(i));
    return phi;
  }
  VectorXd dphi_du(const VectorXd& u) const {
    VectorXd j(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double s = logistic(u(i));
      j(i) = (hi(i) - lo(i)) * s * (1.0 - s);
    }
    return j;
  }
  VectorXd to_u(const VectorXd& phi) const {
    VectorXd u(phi.size());
    for (Eigen::Index i = 0; i < phi.size(); ++i) {
      const double s = std::clamp((phi(i) - lo(i)) / (hi(i) - lo(i)), 1e-9, 1.0 - 1e-9);
      u(i) = std::log(s / (1.0 - s));
    }
    return u;
  }
};

struct Standardized {
  MatrixXd cols;
  VectorXd resid;
  VectorXd noise;
};

// Negative log-likelihood in u-space; +inf when the covariance cannot be factorized.
struct Objective {
  const Standardized& data;
  const BoxMap& box;

  double operator()(const VectorXd& u, VectorXd* grad) const {
    const VectorXd phi = box.to_phi(u);
    try {
      const auto lik = likelihood(data.cols, data.resid, data.noise, phi(0), phi.tail(phi.size() - 1), grad != nullptr);
      if (!std::isfinite(lik.value)) return std::numeric_limits<double>::infinity();
      if (grad) *grad = -(lik.gradient.array() * box.dphi_du(u).array()).matrix();
      return -lik.value;
    } catch (const ModelError&) {
      return std::numeric_limits<double>::infinity();
    }
  }
};

// BFGS with Armijo backtracking. Returns the best point found.
VectorXd bfgs_minimize(const Objective& f, VectorXd x, int max_iterations, double* f_out) {
  const auto n = x.size();
  VectorXd g(n);
  double fx = f(x, &g);
  if (!std::isfinite(fx)) {
    *f_out = fx;
    return x;
  }
  MatrixXd h = MatrixXd::Identity(n, n);
  VectorXd g_new(n);
  for (int it = 0; it < max_iterations; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < 1e-7) break;
    VectorXd p = -h * g;
    double slope = g.dot(p);
    if (slope >= 0.0) {
      h.setIdentity();
      p = -g;
      slope = g.dot(p);
    }
    // Keep the first trial step bounded in u-space.
    const double pmax = p.lpNorm<Eigen::Infinity>();
    double step = pmax > 4.0 ? 4.0 / pmax : 1.0;
    double f_new = std::numeric_limits<double>::infinity();
    VectorXd x_new;
    bool accepted = false;
    for (int ls = 0; ls < 30; ++ls) {
      x_new = x + step * p;
      f_new = f(x_new, &g_new);
      if (std::isfinite(f_new) && f_new <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const VectorXd s = x_new - x;
    const VectorXd y = g_new - g;
    const double sy = s.dot(y);
    const double rel_change = std::abs(fx - f_new) / std::max(1.0, std::abs(fx));
    x = x_new;
    g = g_new;
    fx = f_new;
    if (sy > 1e-12) {
      if (it == 0) h *= sy / y.squaredNorm();
      const double rho = 1.0 / sy;
      const MatrixXd ident = MatrixXd::Identity(n, n);
      h = (ident - rho * s * y.transpose()) * h * (ident - rho * y * s.transpose()) + rho * s * s.transpose();
    }
    if (rel_change < 1e-12) break;
  }
  *f_out = fx;
  return x;
}

}  // namespace

void KernelParams::validate(std::size_t dimension) const {
  if (!(process_variance > 0.0) || !std::isfinite(process_variance)) {
    throw DomainError("kernel process variance must be positive and finite");
  }
  if (inverse_lengthscales.size() != dimension) {
    throw DomainError("kernel has " + std::to_string(inverse_lengthscales.size()) +
                      " inverse length-scales, expected " + std::to_string(dimension));
  }
  for (double t : inverse_lengthscales) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("inverse length-scales must be finite and >= 0");
  }
}

double kernel_eval(std::span<const double> a, std::span<const double> b, const KernelParams& params) {
  if (a.size() != b.size() || a.size() != params.inverse_lengthscales.size()) {
    throw DomainError("kernel_eval: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = params.inverse_lengthscales[k] * std::abs(a[k] - b[k]);
    s += t * t;
  }
  return params.process_variance * std::exp(-s);
}

void TrainingSet::validate() const {
  if (responses.empty()) throw DomainError("training set is empty");
  if (inputs.size() != responses.size() || noise.size() != responses.size()) {
    throw DomainError("training set: inputs, responses and noise must have equal length");
  }
  const auto d = dimension();
  if (d == 0) throw DomainError("training set: inputs must have at least one dimension");
  for (const auto& row : inputs) {
    if (row.size() != d) throw DomainError("training set: ragged input rows");
    for (double v : row) {
      if (!std::isfinite(v)) throw DomainError("training set: non-finite input");
    }
  }
  for (double y : responses) {
    if (!std::isfinite(y)) throw DomainError("training set: non-finite response");
  }
  for (double e : noise) {
    if (!std::isfinite(e) || e < 0.0) throw DomainError("training set: noise must be finite and >= 0");
  }
}

double log_marginal_likelihood(const TrainingSet& training, const KernelParams& params) {
  training.validate();
  params.validate(training.dimension());
  return likelihood(to_columns(training), residuals(training, mean_of(training.responses)),
                    noise_vector(training, 1.0), std::log(params.process_variance), log_theta_of(params), false)
      .value;
}

std::vector<double> log_marginal_likelihood_gradient(const TrainingSet& training, const KernelParams& params) {
  training.validate();
  params.validate(training.dimension());
  const auto lik = likelihood(to_columns(training), residuals(training, mean_of(training.responses)),
                              noise_vector(training, 1.0), std::log(params.process_variance),
                              log_theta_of(params), true);
  return {lik.gradient.data(), lik.gradient.data() + lik.gradient.size()};
}

void StochasticKriging::condition(double log_variance_std, std::span<const double> log_theta) {
  const auto d = static_cast<Eigen::Index>(log_theta.size());
  variance_std_ = std::exp(log_variance_std);
  theta_.resize(d);
  for (Eigen::Index k = 0; k < d; ++k) theta_(k) = std::exp(log_theta[k]);

  const MatrixXd k = gram(columns_, variance_std_, theta_);
  MatrixXd c = k;
  c.diagonal() += noise_vector(training_, scale_ * scale_);
  const auto noisy = factorize(c, variance_std_);
  const auto clean = factorize(k, variance_std_);
  if (!noisy || !clean) throw ModelError("covariance matrix is not positive definite even after maximum jitter");

  const VectorXd resid = residuals(training_, mean_) / scale_;
  weights_std_ = noisy->llt.solve(resid);
  // Two steps of iterative refinement against the jittered matrix.
  c.diagonal().array() += noisy->jitter;
  for (int step = 0; step < 2; ++step) weights_std_ += noisy->llt.solve(resid - c * weights_std_);
  jitter_ = noisy->jitter;
  noise_free_chol_ = clean->llt;
  variance_jitter_ = clean->jitter;

  double log_det = 0.0;
  const auto diag = noisy->llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) log_det += 2.0 * std::log(diag(i));
  const auto n = static_cast<double>(training_.size());
  // Reported on the original output scale.
  log_likelihood_ = -0.5 * resid.dot(weights_std_) - 0.5 * log_det - 0.5 * n * std::log(2.0 * std::numbers::pi) -
                    n * std::log(scale_);
  fitted_ = true;
}

StochasticKriging StochasticKriging::fit(TrainingSet training, std::uint64_t seed, const FitOptions& options) {
  training.validate();
  StochasticKriging model;
  model.training_ = std::move(training);
  const auto& t = model.training_;
  model.columns_ = to_columns(t);
  model.mean_ = mean_of(t.responses);
  const auto n = t.size();
  const auto d = t.dimension();

  double ss = 0.0;
  for (double y : t.responses) ss += (y - model.mean_) * (y - model.mean_);
  const double var = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
  model.scale_ = var > 0.0 ? std::sqrt(var) : 1.0;

  std::vector<double> log_theta(d, 0.0);
  if (n < 2) {
    model.condition(0.0, log_theta);
    model.restart_trace_ = {model.log_likelihood_};
    return model;
  }

  Standardized data{model.columns_, residuals(t, model.mean_) / model.scale_,
                    noise_vector(t, model.scale_ * model.scale_)};
  BoxMap box;
  box.lo = VectorXd::Constant(static_cast<Eigen::Index>(d + 1), options.log_theta_lower);
  box.hi = VectorXd::Constant(static_cast<Eigen::Index>(d + 1), options.log_theta_upper);
  box.lo(0) = options.log_variance_lower;
  box.hi(0) = options.log_variance_upper;
  const Objective objective{data, box};

  Rng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  VectorXd best_phi = VectorXd::Zero(static_cast<Eigen::Index>(d + 1));
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    VectorXd phi(static_cast<Eigen::Index>(d + 1));
    for (Eigen::Index i = 0; i < phi.size(); ++i) {
      // First start at the prior (unit variance, theta = 1); the rest are
      // spread over the interior of the box.
      phi(i) = r == 0 ? 0.0 : box.lo(i) + (box.hi(i) - box.lo(i)) * rng.uniform(0.05, 0.95);
    }
    double value = 0.0;
    const VectorXd u = bfgs_minimize(objective, box.to_u(phi), options.max_iterations, &value);
    if (value < best) {
      best = value;
      best_phi = box.to_phi(u);
    }
    model.restart_trace_.push_back(-best);
  }
  if (!std::isfinite(best)) throw ModelError("likelihood could not be evaluated at any start point");
  for (std::size_t k = 0; k < d; ++k) log_theta[k] = best_phi(static_cast<Eigen::Index>(k + 1));
  model.condition(best_phi(0), log_theta);
  // Trace values are on the standardized scale; shift to the reported scale.
  for (double& v : model.restart_trace_) v -= static_cast<double>(n) * std::log(model.scale_);
  return model;
}

StochasticKriging StochasticKriging::with_params(TrainingSet training, KernelParams params) {
  training.validate();
  params.validate(training.dimension());
  StochasticKriging model;
  model.training_ = std::move(training);
  model.columns_ = to_columns(model.training_);
  model.mean_ = mean_of(model.training_.responses);
  model.scale_ = 1.0;
  const VectorXd lt = log_theta_of(params);
  model.condition(std::log(params.process_variance), {lt.data(), static_cast<std::size_t>(lt.size())});
  model.restart_trace_ = {model.log_likelihood_};
  return model;
}

Prediction StochasticKriging::predict(std::span<const double> x) const {
  if (!fitted_) throw StateError("surrogate has not been fitted");
  if (x.size() != static_cast<std::size_t>(columns_.cols())) throw DomainError("predict: dimension mismatch");
  const auto n = columns_.rows();
  VectorXd k_star(n);
  kernel_row(columns_, x, variance_std_, theta_, k_star.data());

  Prediction p;
  p.mean = mean_ + scale_ * simd::dot({k_star.data(), static_cast<std::size_t>(n)},
                                      {weights_std_.data(), static_cast<std::size_t>(n)});
  const VectorXd v = noise_free_chol_.matrixL().solve(k_star);
  const double var_std = std::max(0.0, variance_std_ - v.squaredNorm());
  p.ok_sd = scale_ * std::sqrt(var_std);
  return p;
}

KernelParams StochasticKriging::params() const {
  KernelParams p;
  p.process_variance = variance_std_ * scale_ * scale_;
  p.inverse_lengthscales.assign(theta_.data(), theta_.data() + theta_.size());
  return p;
}

std::vector<double> StochasticKriging::weights() const {
  std::vector<double> w(static_cast<std::size_t>(weights_std_.size()));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = weights_std_(static_cast<Eigen::Index>(i)) / scale_;
  return w;
}

std::vector<double> noise_diagonal(std::span<const ReplicatedObservation> observations,
                                   const std::function<double(const ObjectiveVector&)>& scalarizer) {
  std::vector<double> out;
  out.reserve(observations.size());
  std::vector<double> values;
  for (const auto& obs : observations) {
    values.clear();
    for (const auto& o : obs.outcomes()) values.push_back(scalarizer(o.objectives()));
    const auto mv = sample_mean_var(values);
    out.push_back(obs.replications() > 1 ? mv.variance / static_cast<double>(obs.replications()) : 0.0);
  }
  return out;
}

}  // namespace mogp

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

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>
#include <random>

#include "mogp/errors.hpp"
#include "mogp/surrogate.hpp"
#include "oracles.hpp"

using namespace mogp;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

TrainingSet random_set(std::mt19937_64& gen, std::size_t n, std::size_t d, bool noisy) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TrainingSet t;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(d);
    for (auto& v : x) v = u(gen);
    t.inputs.push_back(x);
    t.responses.push_back(3.0 * u(gen) - 1.0);
    t.noise.push_back(noisy ? 0.1 * u(gen) : 0.0);
  }
  return t;
}

KernelParams random_params(std::mt19937_64& gen, std::size_t d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  KernelParams p;
  p.process_variance = 0.2 + 2.0 * u(gen);
  for (std::size_t k = 0; k < d; ++k) p.inverse_lengthscales.push_back(0.3 + 3.0 * u(gen));
  return p;
}

}  // namespace

TEST_CASE("kernel examples") {
  KernelParams p{2.5, {1.0, 3.0}};
  const std::vector<double> a{0.1, 0.2}, b{0.7, 0.9};
  CHECK(kernel_eval(a, a, p) == 2.5);
  CHECK(kernel_eval(a, b, KernelParams{2.5, {0.0, 0.0}}) == 2.5);
  CHECK_THAT(kernel_eval(std::vector<double>{0.0}, std::vector<double>{1.0}, KernelParams{1.0, {1.0}}),
             WithinAbs(0.367879441171, 1e-12));
  CHECK_THROWS_AS(kernel_eval(a, std::vector<double>{0.1}, p), DomainError);
}

TEST_CASE("Gram matrices are symmetric and positive semidefinite") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(gen, 6);
    std::vector<std::vector<double>> pts(5, std::vector<double>(6));
    for (auto& row : pts) {
      for (auto& v : row) v = u(gen);
    }
    Eigen::MatrixXd k(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        k(i, j) = kernel_eval(pts[i], pts[j], p);
        CHECK(kernel_eval(pts[i], pts[j], p) == kernel_eval(pts[j], pts[i], p));
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    CHECK(es.eigenvalues().minCoeff() >= -1e-8);
  }
}

TEST_CASE("two-point hand case matches a direct linear solve") {
  TrainingSet t;
  t.inputs = {{0.2}, {0.6}};
  t.responses = {1.0, 3.0};
  t.noise = {0.05, 0.2};
  const KernelParams p{1.5, {2.0}};
  const auto model = StochasticKriging::with_params(t, p);
  const std::vector<double> xs{0.45};
  const auto got = model.predict(xs);
  const auto want = oracle::gp_predict(t.inputs, t.responses, t.noise, 1.5, {2.0}, xs, model.jitter(),
                                       model.variance_jitter());
  CHECK_THAT(got.mean, WithinAbs(want.mean, 1e-10));
  CHECK_THAT(got.ok_sd, WithinAbs(want.ok_sd, 1e-10));
  // The same formula evaluated with no jitter differs only at the jitter scale.
  const auto bare = oracle::gp_predict(t.inputs, t.responses, t.noise, 1.5, {2.0}, xs, 0.0, 0.0);
  CHECK_THAT(got.mean, WithinAbs(bare.mean, 1e-6));
}

TEST_CASE("prediction matches the oracle on random sets") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6, d = 1 + (trial / 6) % 6;
    const auto t = random_set(gen, n, d, trial % 2 == 0);
    const auto p = random_params(gen, d);
    const auto model = StochasticKriging::with_params(t, p);
    std::vector<double> xs(d);
    for (auto& v : xs) v = u(gen);
    const auto got = model.predict(xs);
    const auto want = oracle::gp_predict(t.inputs, t.responses, t.noise, p.process_variance, p.inverse_lengthscales,
                                         xs, model.jitter(), model.variance_jitter());
    CHECK_THAT(got.mean, WithinAbs(want.mean, 1e-8));
    CHECK_THAT(got.ok_sd, WithinAbs(want.ok_sd, 1e-8));
  }
}

TEST_CASE("weights solve the noisy system") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_set(gen, 12, 3, true);
    const auto model = StochasticKriging::fit(t, 99);
    const auto p = model.params();
    const auto w = model.weights();
    for (std::size_t i = 0; i < t.size(); ++i) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < t.size(); ++j) {
        lhs += (kernel_eval(t.inputs[i], t.inputs[j], p) + (i == j ? t.noise[i] + model.jitter() : 0.0)) * w[j];
      }
      CHECK_THAT(lhs, WithinAbs(t.responses[i] - model.mean_constant(), 1e-8));
    }
  }
}

TEST_CASE("noise-free model interpolates") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_set(gen, 8, 2, false);
    const auto model = StochasticKriging::fit(t, trial);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto p = model.predict(t.inputs[i]);
      CHECK_THAT(p.mean, WithinAbs(t.responses[i], 1e-5));
      CHECK(p.ok_sd <= 1e-2);
    }
  }
  // Fixed, well-conditioned kernel: tighter bounds.
  TrainingSet t{{{0.1}, {0.5}, {0.9}}, {1.0, -2.0, 0.5}, {0, 0, 0}};
  const auto model = StochasticKriging::with_params(t, KernelParams{1.0, {3.0}});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK_THAT(model.predict(t.inputs[i]).mean, WithinAbs(t.responses[i], 1e-6));
    CHECK(model.predict(t.inputs[i]).ok_sd <= 1e-4);
  }
}

TEST_CASE("prediction reverts to the prior far from the data") {
  TrainingSet t{{{0.0, 0.0}, {0.1, 0.05}}, {2.0, 4.0}, {0.0, 0.0}};
  const auto model = StochasticKriging::with_params(t, KernelParams{2.0, {20.0, 20.0}});
  const auto p = model.predict(std::vector<double>{1.0, 1.0});
  CHECK_THAT(p.mean, WithinAbs(3.0, 1e-12));
  CHECK_THAT(p.ok_sd, WithinAbs(std::sqrt(2.0), 1e-12));
}

TEST_CASE("constant responses predict that constant") {
  TrainingSet t{{{0.1}, {0.4}, {0.8}}, {1.25, 1.25, 1.25}, {0, 0, 0}};
  const auto model = StochasticKriging::fit(t, 1);
  for (double x : {0.0, 0.3, 0.55, 1.0}) CHECK_THAT(model.predict(std::vector<double>{x}).mean, WithinAbs(1.25, 1e-6));
}

TEST_CASE("fitted likelihood is at least that of the generating parameters") {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> z(0.0, 1.0);
  const KernelParams truth{1.5, {2.0, 1.0}};
  for (int trial = 0; trial < 5; ++trial) {
    TrainingSet t;
    const std::size_t n = 15;
    for (std::size_t i = 0; i < n; ++i) t.inputs.push_back({u(gen), u(gen)});
    // Sample y ~ N(0, K) through a hand Cholesky.
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double s = kernel_eval(t.inputs[i], t.inputs[j], truth) + (i == j ? 1e-6 : 0.0);
        for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
        l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
      }
    }
    std::vector<double> e(n);
    for (auto& v : e) v = z(gen);
    for (std::size_t i = 0; i < n; ++i) {
      double y = 0.0;
      for (std::size_t k = 0; k <= i; ++k) y += l[i][k] * e[k];
      t.responses.push_back(y);
      t.noise.push_back(0.01);
    }
    const auto model = StochasticKriging::fit(t, 77);
    CHECK(model.log_likelihood() >= log_marginal_likelihood(t, truth) - 1e-6);
    CHECK_THAT(model.log_likelihood(), WithinAbs(log_marginal_likelihood(t, model.params()), 1e-7));
    const auto& trace = model.restart_trace();
    REQUIRE(trace.size() == 10);
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] >= trace[i - 1]);
  }
}

TEST_CASE("analytic gradient matches central differences") {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_set(gen, 7, 3, true);
    const auto p = random_params(gen, 3);
    const auto g = log_marginal_likelihood_gradient(t, p);
    REQUIRE(g.size() == 4);
    const double h = 1e-5;
    for (std::size_t q = 0; q < 4; ++q) {
      auto up = p, down = p;
      if (q == 0) {
        up.process_variance *= std::exp(h);
        down.process_variance *= std::exp(-h);
      } else {
        up.inverse_lengthscales[q - 1] *= std::exp(h);
        down.inverse_lengthscales[q - 1] *= std::exp(-h);
      }
      const double fd = (log_marginal_likelihood(t, up) - log_marginal_likelihood(t, down)) / (2 * h);
      CHECK(std::fabs(g[q] - fd) <= 1e-4 * std::max(1.0, std::fabs(fd)));
    }
  }
}

TEST_CASE("fit is deterministic and validates input") {
  std::mt19937_64 gen(6);
  const auto t = random_set(gen, 10, 4, true);
  const auto a = StochasticKriging::fit(t, 5), b = StochasticKriging::fit(t, 5);
  CHECK(a.params().process_variance == b.params().process_variance);
  CHECK(a.params().inverse_lengthscales == b.params().inverse_lengthscales);

  auto bad = t;
  bad.responses[0] = std::nan("");
  CHECK_THROWS_AS(StochasticKriging::fit(bad, 1), DomainError);
  bad = t;
  bad.noise[1] = -1.0;
  CHECK_THROWS_AS(StochasticKriging::fit(bad, 1), DomainError);
  CHECK_THROWS_AS(StochasticKriging{}.predict(std::vector<double>{0.0}), StateError);

  // A single point falls back to prior defaults.
  TrainingSet one{{{0.3, 0.3}}, {2.0}, {0.0}};
  const auto m = StochasticKriging::fit(one, 1);
  CHECK_THAT(m.predict(std::vector<double>{0.3, 0.3}).mean, WithinAbs(2.0, 1e-9));
}

TEST_CASE("noise diagonal is the replication variance over r") {
  const Configuration c{{0, 400, 100, 1, 10, 10}};
  auto obs_of = [&](std::vector<double> strengths) {
    std::vector<Outcome> outs;
    for (double s : strengths) outs.push_back({s, 1.0, FailureMode::cohesive, false});
    return ReplicatedObservation::from_outcomes(c, outs);
  };
  const std::vector<ReplicatedObservation> obs{obs_of({1, 1, 1, 1, 1}), obs_of({0, 2}), obs_of({5})};
  // Scalarizer returns the strength itself.
  const auto diag = noise_diagonal(obs, [](const ObjectiveVector& v) { return -v.neg_strength; });
  CHECK(diag[0] == 0.0);
  CHECK_THAT(diag[1], WithinAbs(1.0, 1e-15));
  CHECK(diag[2] == 0.0);
}

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

#include <random>

#include "mogp/errors.hpp"
#include "mogp/feasibility.hpp"

using namespace mogp;
using Catch::Matchers::WithinAbs;

namespace {
Outcome ok() { return {20, 1, FailureMode::cohesive, false}; }
Outcome bad() { return {20, 1, FailureMode::adhesion, false}; }
}  // namespace

TEST_CASE("majority label") {
  CHECK(majority_label(std::vector<Outcome>{ok(), ok(), bad(), ok(), bad()}) == 1);
  CHECK(majority_label(std::vector<Outcome>{bad(), bad(), bad()}) == 0);
  CHECK(majority_label(std::vector<Outcome>{ok(), bad()}) == 1);
  CHECK_THROWS_AS(majority_label(std::vector<Outcome>{}), DomainError);
}

TEST_CASE("predict_pf hand values") {
  LrModel zero{0.0, {0.0, 0.0}};
  CHECK(predict_pf(zero, std::vector<double>{0.3, 0.9}) == 0.5);
  LrModel m{std::log(3.0), {0.0}};
  CHECK_THAT(predict_pf(m, std::vector<double>{0.4}), WithinAbs(0.75, 1e-15));
  m.beta0 = -std::log(3.0);
  CHECK_THAT(predict_pf(m, std::vector<double>{0.4}), WithinAbs(0.25, 1e-15));
}

TEST_CASE("negated coefficients give the complementary probability") {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 500; ++i) {
    LrModel m{u(gen), {u(gen), u(gen), u(gen)}};
    LrModel neg{-m.beta0, {-m.beta[0], -m.beta[1], -m.beta[2]}};
    const std::vector<double> x{u(gen) / 3, u(gen) / 3, u(gen) / 3};
    CHECK_THAT(predict_pf(m, x) + predict_pf(neg, x), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("coefficient recovery from synthetic data") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(-2.0, 2.0), coin(0.0, 1.0);
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  for (int i = 0; i < 5000; ++i) {
    const double xi = u(gen);
    const double p = 1.0 / (1.0 + std::exp(-(-1.0 + 2.0 * xi)));
    x.push_back({xi});
    y.push_back(coin(gen) < p ? 1 : 0);
  }
  const auto m = fit_lr(x, y);
  CHECK(m.converged);
  CHECK_THAT(m.beta0, WithinAbs(-1.0, 0.15));
  CHECK_THAT(m.beta[0], WithinAbs(2.0, 0.15));
  for (std::size_t i = 1; i < m.objective_trace.size(); ++i) CHECK(m.objective_trace[i] >= m.objective_trace[i - 1]);
}

TEST_CASE("separable and degenerate data stay finite") {
  std::vector<std::vector<double>> x{{0.1}, {0.2}, {0.8}, {0.9}};
  const auto sep = fit_lr(x, std::vector<int>{0, 0, 1, 1});
  CHECK(std::isfinite(sep.beta0));
  CHECK(std::isfinite(sep.beta[0]));
  CHECK(sep.beta[0] > 0.0);

  const auto all_one = fit_lr(x, std::vector<int>{1, 1, 1, 1});
  for (const auto& xi : x) CHECK(predict_pf(all_one, xi) > 0.5);

  CHECK_THROWS_AS(fit_lr(x, std::vector<int>{0, 2, 1, 1}), DomainError);
  CHECK_THROWS_AS(fit_lr(std::vector<std::vector<double>>{}, std::vector<int>{}), DomainError);
}

TEST_CASE("mirrored data gives a zero intercept") {
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  for (double v : {0.1, 0.3, 0.45, 0.7}) {
    x.push_back({v});
    y.push_back(1);
    x.push_back({-v});
    y.push_back(0);
  }
  // Overlap so the fit is not driven by separation alone.
  x.push_back({0.2});
  y.push_back(0);
  x.push_back({-0.2});
  y.push_back(1);
  const auto m = fit_lr(x, y);
  CHECK_THAT(m.beta0, WithinAbs(0.0, 1e-6));
}

TEST_CASE("probability is monotone along each axis in the sign of its coefficient") {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  for (int i = 0; i < 400; ++i) {
    std::vector<double> xi{u(gen), u(gen), u(gen)};
    const double lin = -0.5 + 3 * xi[0] - 2 * xi[1] + 0.5 * xi[2];
    y.push_back(u(gen) < 1 / (1 + std::exp(-lin)) ? 1 : 0);
    x.push_back(xi);
  }
  const auto m = fit_lr(x, y);
  CHECK(m.converged);
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<double> a{0.5, 0.5, 0.5}, b = a;
    b[k] = 0.9;
    CHECK((predict_pf(m, b) > predict_pf(m, a)) == (m.beta[k] > 0));
  }
}

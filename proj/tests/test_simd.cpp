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

#include "mogp/simd/kernels.hpp"

using namespace mogp;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace {

struct Variant {
  const char* name;
  bool available;
  void (*wsd)(const double*, const double*, std::size_t, const double*, std::size_t, double*);
  double (*dot)(const double*, const double*, std::size_t);
  std::size_t (*dom)(const double*, const double*, std::size_t, double, double);
};

std::vector<Variant> variants() {
  return {
      {"avx2", simd::avx2::available(), simd::avx2::weighted_sq_distances, simd::avx2::dot,
       simd::avx2::count_dominating},
      {"neon", simd::neon::available(), simd::neon::weighted_sq_distances, simd::neon::dot,
       simd::neon::count_dominating},
  };
}

std::vector<double> random_vec(std::size_t n, std::mt19937_64& gen, double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(gen);
  return v;
}

}  // namespace

TEST_CASE("vector kernels agree with the scalar reference") {
  std::mt19937_64 gen(17);
  for (const auto& v : variants()) {
    if (!v.available) continue;
    INFO(v.name);
    // Lengths straddle the lane width and the unrolled remainder paths.
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 60u, 257u}) {
      for (std::size_t d : {1u, 2u, 6u}) {
        const auto q = random_vec(d, gen, 0, 1);
        const auto w = random_vec(d, gen, 0, 5);
        const auto cols = random_vec(d * n, gen, 0, 1);
        std::vector<double> a(n), b(n);
        simd::scalar::weighted_sq_distances(q.data(), w.data(), d, cols.data(), n, a.data());
        v.wsd(q.data(), w.data(), d, cols.data(), n, b.data());
        for (std::size_t i = 0; i < n; ++i) CHECK_THAT(b[i], WithinAbs(a[i], 1e-13 * (1 + a[i])));
      }
      const auto x = random_vec(n, gen), y = random_vec(n, gen);
      CHECK_THAT(v.dot(x.data(), y.data(), n), WithinAbs(simd::scalar::dot(x.data(), y.data(), n), 1e-12));

      std::uniform_int_distribution<int> coarse(0, 3);  // many ties
      std::vector<double> f1(n), f2(n);
      for (std::size_t i = 0; i < n; ++i) {
        f1[i] = coarse(gen);
        f2[i] = coarse(gen);
      }
      for (int t = 0; t < 10; ++t) {
        const double q1 = coarse(gen), q2 = coarse(gen);
        CHECK(v.dom(f1.data(), f2.data(), n, q1, q2) == simd::scalar::count_dominating(f1.data(), f2.data(), n, q1, q2));
      }
    }
  }
}

TEST_CASE("scalar kernels match their definitions") {
  const double q[2] = {0.5, 0.0};
  const double w[2] = {2.0, 1.0};
  const double cols[4] = {0.0, 0.5, 1.0, 0.0};  // points (0,1) and (0.5,0)
  double out[2];
  simd::scalar::weighted_sq_distances(q, w, 2, cols, 2, out);
  CHECK(out[0] == 2.0);  // (2*0.5)^2 + (1*1)^2
  CHECK(out[1] == 0.0);
  const double f1[3] = {1, 1, 2}, f2[3] = {1, 2, 1};
  CHECK(simd::scalar::count_dominating(f1, f2, 3, 1, 1) == 0);
  CHECK(simd::scalar::count_dominating(f1, f2, 3, 2, 2) == 3);
  CHECK(simd::scalar::count_dominating(f1, f2, 3, 1, 2) == 1);
}

TEST_CASE("dispatch honours forced ISA and falls back to scalar") {
  const auto detected = simd::detected_isa();
  CHECK(simd::active_isa() == detected);
  simd::force_isa(simd::Isa::scalar);
  CHECK(simd::active_isa() == simd::Isa::scalar);
  std::vector<double> a{1, 2, 3, 4, 5}, b{5, 4, 3, 2, 1};
  CHECK(simd::dot(a, b) == 35.0);
  simd::force_isa(simd::Isa::neon);
  if (!simd::neon::available()) CHECK(simd::active_isa() == simd::Isa::scalar);
  simd::force_isa(std::nullopt);
  CHECK(simd::active_isa() == detected);
  CHECK(simd::dot(a, b) == 35.0);
}

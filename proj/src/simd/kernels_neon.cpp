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

#include <arm_neon.h>

#include "mogp/simd/kernels.hpp"

namespace mogp::simd::neon {

void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < d; ++k) {
      const float64x2_t q = vdupq_n_f64(query[k]);
      const float64x2_t w = vdupq_n_f64(weights[k]);
      const float64x2_t x = vld1q_f64(columns + k * n + i);
      const float64x2_t t = vmulq_f64(w, vsubq_f64(q, x));
      acc = vaddq_f64(acc, vmulq_f64(t, t));
    }
    vst1q_f64(out + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double t = weights[k] * (query[k] - columns[k * n + i]);
      acc += t * t;
    }
    out[i] = acc;
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2) {
  const float64x2_t v1 = vdupq_n_f64(q1);
  const float64x2_t v2 = vdupq_n_f64(q2);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(f1 + i);
    const float64x2_t b = vld1q_f64(f2 + i);
    const uint64x2_t le = vandq_u64(vcleq_f64(a, v1), vcleq_f64(b, v2));
    const uint64x2_t lt = vorrq_u64(vcltq_f64(a, v1), vcltq_f64(b, v2));
    const uint64x2_t hit = vandq_u64(le, lt);
    count += (vgetq_lane_u64(hit, 0) ? 1 : 0) + (vgetq_lane_u64(hit, 1) ? 1 : 0);
  }
  for (; i < n; ++i) {
    const bool le = f1[i] <= q1 && f2[i] <= q2;
    const bool lt = f1[i] < q1 || f2[i] < q2;
    count += (le && lt) ? 1 : 0;
  }
  return count;
}

}  // namespace mogp::simd::neon

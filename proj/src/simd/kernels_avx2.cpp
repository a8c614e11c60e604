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

// Built with -mavx2. Nothing here may run before dispatch.cpp has confirmed
// AVX2 support on the running CPU.

#include <immintrin.h>

#include "mogp/simd/kernels.hpp"

namespace mogp::simd::avx2 {

void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < d; ++k) {
      const __m256d q = _mm256_set1_pd(query[k]);
      const __m256d w = _mm256_set1_pd(weights[k]);
      const __m256d x = _mm256_loadu_pd(columns + k * n + i);
      const __m256d t = _mm256_mul_pd(w, _mm256_sub_pd(q, x));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(t, t));
    }
    _mm256_storeu_pd(out + i, acc);
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
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2) {
  const __m256d v1 = _mm256_set1_pd(q1);
  const __m256d v2 = _mm256_set1_pd(q2);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(f1 + i);
    const __m256d b = _mm256_loadu_pd(f2 + i);
    const __m256d le = _mm256_and_pd(_mm256_cmp_pd(a, v1, _CMP_LE_OQ), _mm256_cmp_pd(b, v2, _CMP_LE_OQ));
    const __m256d lt = _mm256_or_pd(_mm256_cmp_pd(a, v1, _CMP_LT_OQ), _mm256_cmp_pd(b, v2, _CMP_LT_OQ));
    const int mask = _mm256_movemask_pd(_mm256_and_pd(le, lt));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
    const bool le = f1[i] <= q1 && f2[i] <= q2;
    const bool lt = f1[i] < q1 || f2[i] < q2;
    count += (le && lt) ? 1 : 0;
  }
  return count;
}

}  // namespace mogp::simd::avx2

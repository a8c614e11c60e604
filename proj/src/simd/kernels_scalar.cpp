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

#include "mogp/simd/kernels.hpp"

namespace mogp::simd::scalar {

void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double q = query[k];
    const double w = weights[k];
    const double* col = columns + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = w * (q - col[i]);
      out[i] += t * t;
    }
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool le = f1[i] <= q1 && f2[i] <= q2;
    const bool lt = f1[i] < q1 || f2[i] < q2;
    count += (le && lt) ? 1 : 0;
  }
  return count;
}

}  // namespace mogp::simd::scalar

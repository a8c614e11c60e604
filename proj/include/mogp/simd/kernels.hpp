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

// Data-parallel inner loops used by the surrogate and the Pareto utilities.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The public entry
// points dispatch at runtime on the detected instruction set; the per-ISA
// namespaces are exposed so tests can check each variant against the scalar
// reference.
//
// Matrices are passed column-major: column k of an n-row matrix starts at
// data[k * n]. This keeps one input dimension contiguous across training
// points, which is the direction the vector lanes run in.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace mogp::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

/// Best instruction set compiled in and supported by the running CPU.
Isa detected_isa();
/// Instruction set the dispatching entry points currently use.
Isa active_isa();
/// Force a specific variant (tests, benchmarking); nullopt restores detection.
/// Requesting an ISA that is not available falls back to scalar.
void force_isa(std::optional<Isa> isa);

/// out[i] = sum_k (weights[k] * (query[k] - columns[k*n + i]))^2 for i < n.
/// query and weights have length d; columns holds d*n values.
void weighted_sq_distances(std::span<const double> query, std::span<const double> weights,
                           std::span<const double> columns, std::size_t n, std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);

/// Number of points (f1[i], f2[i]) that Pareto-dominate (q1, q2) under
/// minimization.
std::size_t count_dominating(std::span<const double> f1, std::span<const double> f2, double q1,
                             double q2);

namespace scalar {
void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out);
double dot(const double* a, const double* b, std::size_t n);
std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2);
}  // namespace scalar

namespace avx2 {
bool available();
void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out);
double dot(const double* a, const double* b, std::size_t n);
std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2);
}  // namespace avx2

namespace neon {
bool available();
void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out);
double dot(const double* a, const double* b, std::size_t n);
std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2);
}  // namespace neon

}  // namespace mogp::simd

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

#include <atomic>
#include <stdexcept>

#include "mogp/simd/kernels.hpp"

namespace mogp::simd {

// Variants that are not compiled for this target forward to the scalar code so
// every namespace links on every platform; available() reports the truth.
#ifndef MOGP_HAVE_AVX2
namespace avx2 {
void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out) {
  scalar::weighted_sq_distances(query, weights, d, columns, n, out);
}
double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }
std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2) {
  return scalar::count_dominating(f1, f2, n, q1, q2);
}
}  // namespace avx2
#endif

#ifndef MOGP_HAVE_NEON
namespace neon {
void weighted_sq_distances(const double* query, const double* weights, std::size_t d,
                           const double* columns, std::size_t n, double* out) {
  scalar::weighted_sq_distances(query, weights, d, columns, n, out);
}
double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }
std::size_t count_dominating(const double* f1, const double* f2, std::size_t n, double q1,
                             double q2) {
  return scalar::count_dominating(f1, f2, n, q1, q2);
}
}  // namespace neon
#endif

bool avx2::available() {
#if defined(MOGP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

bool neon::available() {
#ifdef MOGP_HAVE_NEON
  return true;  // mandatory on aarch64
#else
  return false;
#endif
}

namespace {

// -1 means "use detection"; otherwise the forced Isa value.
std::atomic<int> forced{-1};

bool usable(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return avx2::available();
    case Isa::neon:
      return neon::available();
  }
  return false;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "scalar";
}

Isa detected_isa() {
  if (avx2::available()) return Isa::avx2;
  if (neon::available()) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa detected = detected_isa();
  return detected;
}

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    forced.store(-1);
    return;
  }
  forced.store(static_cast<int>(usable(*isa) ? *isa : Isa::scalar));
}

void weighted_sq_distances(std::span<const double> query, std::span<const double> weights,
                           std::span<const double> columns, std::size_t n, std::span<double> out) {
  const std::size_t d = query.size();
  if (weights.size() != d || columns.size() != d * n || out.size() < n) {
    throw std::invalid_argument("weighted_sq_distances: inconsistent extents");
  }
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::weighted_sq_distances(query.data(), weights.data(), d, columns.data(), n, out.data());
    case Isa::neon:
      return neon::weighted_sq_distances(query.data(), weights.data(), d, columns.data(), n, out.data());
    case Isa::scalar:
      break;
  }
  scalar::weighted_sq_distances(query.data(), weights.data(), d, columns.data(), n, out.data());
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::dot(a.data(), b.data(), a.size());
    case Isa::neon:
      return neon::dot(a.data(), b.data(), a.size());
    case Isa::scalar:
      break;
  }
  return scalar::dot(a.data(), b.data(), a.size());
}

std::size_t count_dominating(std::span<const double> f1, std::span<const double> f2, double q1,
                             double q2) {
  if (f1.size() != f2.size()) throw std::invalid_argument("count_dominating: length mismatch");
  switch (active_isa()) {
    case Isa::avx2:
      return avx2::count_dominating(f1.data(), f2.data(), f1.size(), q1, q2);
    case Isa::neon:
      return neon::count_dominating(f1.data(), f2.data(), f1.size(), q1, q2);
    case Isa::scalar:
      break;
  }
  return scalar::count_dominating(f1.data(), f2.data(), f1.size(), q1, q2);
}

}  // namespace mogp::simd

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

#include <cstdint>
#include <vector>

#include "mogp/domain.hpp"

namespace mogp {

enum class DesignMethod { lhs, halton };

struct Design {
  std::vector<Configuration> points;
  std::uint64_t seed = 0;
  DesignMethod method = DesignMethod::lhs;
};

/// Latin hypercube sample: each dimension is split into n strata of width
/// 1/n and every stratum receives exactly one point (continuous dimensions
/// keep this exactly; binary/integer dimensions are rounded afterwards).
Design latin_hypercube(int n, const DesignSpace& space, std::uint64_t seed);

/// Unit-cube LHS before rounding, n rows of d coordinates.
std::vector<std::vector<double>> latin_hypercube_unit(int n, std::size_t d, std::uint64_t seed);

/// Radical inverse of index in the given base (index 1 in base 2 -> 0.5).
double radical_inverse(std::uint64_t index, unsigned base);

/// Halton points with the first d primes as bases. Point i uses sequence
/// index skip + i + 1, so halton(n) is a prefix of halton(n + k).
Design halton(int n, const DesignSpace& space, std::uint64_t skip = 0);

}  // namespace mogp

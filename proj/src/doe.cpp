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

#include "mogp/doe.hpp"

#include <numeric>

#include "mogp/errors.hpp"
#include "mogp/rng.hpp"

namespace mogp {

namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

std::vector<std::vector<double>> latin_hypercube_unit(int n, std::size_t d, std::uint64_t seed) {
  if (n <= 0) throw DomainError("latin_hypercube: n must be positive");
  Rng rng(seed);
  std::vector<std::vector<double>> unit(n, std::vector<double>(d));
  std::vector<int> perm(n);
  for (std::size_t k = 0; k < d; ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    for (int i = 0; i < n; ++i) {
      unit[i][k] = (perm[i] + rng.uniform()) / n;
    }
  }
  return unit;
}

Design latin_hypercube(int n, const DesignSpace& space, std::uint64_t seed) {
  Design design;
  design.seed = seed;
  design.method = DesignMethod::lhs;
  for (const auto& u : latin_hypercube_unit(n, space.dimension(), seed)) {
    design.points.push_back(space.decode(u));
  }
  return design;
}

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

Design halton(int n, const DesignSpace& space, std::uint64_t skip) {
  if (n <= 0) throw DomainError("halton: n must be positive");
  if (space.dimension() > std::size(kPrimes)) throw DomainError("halton: too many dimensions");
  Design design;
  design.seed = skip;
  design.method = DesignMethod::halton;
  design.points.reserve(n);
  std::vector<double> u(space.dimension());
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < space.dimension(); ++k) {
      u[k] = radical_inverse(skip + static_cast<std::uint64_t>(i) + 1, kPrimes[k]);
    }
    design.points.push_back(space.decode(u));
  }
  return design;
}

}  // namespace mogp

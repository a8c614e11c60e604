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

// Macro-replication runner: every algorithm sees the same initial design and
// the same simulator noise stream within a macro-rep, and HV is tracked on
// the cumulative archive after each evaluated configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mogp/campaign.hpp"
#include "mogp/metrics.hpp"

namespace mogp {

enum class Algorithm { mo_gp, random, nsga2 };

std::string_view to_string(Algorithm algorithm);
/// "mo-gp", "random" or "nsga2"; DomainError listing the valid names otherwise.
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> parse_algorithm_list(std::string_view comma_separated);

struct BenchmarkPlan {
  std::vector<Algorithm> algorithms{Algorithm::mo_gp, Algorithm::random, Algorithm::nsga2};
  int macro_reps = 50;
  std::vector<double> gammas{0.0, 0.30};
  std::uint64_t seed = 1;
  /// k, I, r, rho, ridge, restarts and PSO come from here; the space and
  /// seed are overridden per macro-rep.
  CampaignSettings campaign;
  /// Halton count of the IGD+ reference front; 0 skips IGD+.
  int reference_points = 20000;
  int threads = 1;

  /// Throws DomainError.
  void validate() const;
};

struct CellResult {
  Algorithm algorithm = Algorithm::mo_gp;
  double gamma = 0.0;
  int macro_rep = 0;
  std::vector<double> hv_curve;  // one value per evaluated configuration
  FrontReport front;             // igd_plus filled when a reference front exists
  std::uint64_t outcome_records = 0;
  std::string error;             // non-empty if the cell failed
};

struct SummaryRow {
  Algorithm algorithm = Algorithm::mo_gp;
  double gamma = 0.0;
  double hv_mean = 0.0;
  std::optional<double> igd_plus_mean;
  int completed = 0;
  bool best_hv = false;
  bool best_igd_plus = false;
};

struct BenchmarkResult {
  /// Ordered by gamma, then algorithm (plan order), then macro-rep.
  std::vector<CellResult> cells;
  std::vector<FrontPoint> reference;

  const CellResult* find(Algorithm algorithm, double gamma, int macro_rep) const;
};

/// Seeds shared by all algorithms of one macro-rep.
std::uint64_t macro_rep_design_seed(std::uint64_t seed, int macro_rep);
std::uint64_t macro_rep_simulator_seed(std::uint64_t seed, int macro_rep);

BenchmarkResult run_benchmark(const BenchmarkPlan& plan);

/// One row per (gamma, algorithm) in plan order; best flags within each gamma.
std::vector<SummaryRow> summarize(const BenchmarkResult& result);

/// Mean HV curve over completed macro-reps of one algorithm and gamma.
std::vector<double> mean_curve(const BenchmarkResult& result, Algorithm algorithm, double gamma);

/// Macro-reps with the best, median and worst final HV (by index into cells).
struct RankedFronts {
  std::size_t best = 0;
  std::size_t median = 0;
  std::size_t worst = 0;
};
std::optional<RankedFronts> rank_fronts(const BenchmarkResult& result, Algorithm algorithm, double gamma);

/// "algorithm,gamma,macro_rep,budget,hv" with budget counted from 1.
std::string curves_csv(const BenchmarkResult& result);
/// "algorithm,gamma,hv_mean,igd_plus_mean".
std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace mogp

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

#include "mogp/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "mogp/baselines.hpp"
#include "mogp/doe.hpp"
#include "mogp/errors.hpp"
#include "mogp/records.hpp"
#include "mogp/rng.hpp"
#include "mogp/simulator.hpp"

namespace mogp {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::mo_gp:
      return "mo-gp";
    case Algorithm::random:
      return "random";
    case Algorithm::nsga2:
      return "nsga2";
  }
  return "mo-gp";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "mo-gp") return Algorithm::mo_gp;
  if (name == "random") return Algorithm::random;
  if (name == "nsga2") return Algorithm::nsga2;
  throw DomainError("unknown algorithm '" + std::string(name) + "' (valid: mo-gp, random, nsga2)");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view text) {
  std::vector<Algorithm> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto algo = parse_algorithm(text.substr(start, end - start));
    if (std::find(out.begin(), out.end(), algo) != out.end()) {
      throw DomainError("algorithm listed twice: " + std::string(to_string(algo)));
    }
    out.push_back(algo);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void BenchmarkPlan::validate() const {
  if (algorithms.empty()) throw DomainError("at least one algorithm is required");
  if (macro_reps < 1) throw DomainError("macro_reps must be >= 1");
  if (gammas.empty()) throw DomainError("at least one gamma is required");
  for (double g : gammas) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("gamma must be finite and >= 0");
  }
  if (reference_points < 0) throw DomainError("reference_points must be >= 0");
  if (threads < 1) throw DomainError("threads must be >= 1");
  campaign.validate();
  const bool nsga = std::find(algorithms.begin(), algorithms.end(), Algorithm::nsga2) != algorithms.end();
  if (nsga && campaign.iterations % campaign.init_size != 0) {
    throw DomainError("nsga2 needs iterations to be a multiple of init_size (population)");
  }
}

const CellResult* BenchmarkResult::find(Algorithm algorithm, double gamma, int macro_rep) const {
  for (const auto& c : cells) {
    if (c.algorithm == algorithm && c.gamma == gamma && c.macro_rep == macro_rep) return &c;
  }
  return nullptr;
}

std::uint64_t macro_rep_design_seed(std::uint64_t seed, int macro_rep) {
  return derive_seed(seed, "macro-rep-design", static_cast<std::uint64_t>(macro_rep));
}

std::uint64_t macro_rep_simulator_seed(std::uint64_t seed, int macro_rep) {
  return derive_seed(seed, "macro-rep-simulator", static_cast<std::uint64_t>(macro_rep));
}

namespace {

void run_cell(const BenchmarkPlan& plan, const std::vector<ObjectiveVector>& reference, CellResult& cell) {
  CampaignSettings settings = plan.campaign;
  const auto& space = settings.space;
  const std::uint64_t design_seed = macro_rep_design_seed(plan.seed, cell.macro_rep);
  settings.seed = design_seed;
  auto design = latin_hypercube(settings.init_size, space, design_seed).points;

  SimulatorSettings sim;
  sim.gamma = cell.gamma;
  sim.seed = macro_rep_simulator_seed(plan.seed, cell.macro_rep);
  Simulator simulator(sim, space);
  const int r = settings.replications;
  Evaluator evaluator = [&](const Configuration& c) { return simulator.evaluate(c, r); };

  switch (cell.algorithm) {
    case Algorithm::mo_gp: {
      auto run_result = run(settings, std::move(design), evaluator);
      cell.hv_curve = std::move(run_result.hv_history);
      cell.front = run_result.campaign.current_front();
      cell.outcome_records = run_result.outcome_records;
      break;
    }
    case Algorithm::random: {
      auto res = random_search(settings.budget(), r, space, evaluator,
                               derive_seed(plan.seed, "random", static_cast<std::uint64_t>(cell.macro_rep)),
                               settings.reference, design);
      cell.hv_curve = std::move(res.hv_history);
      cell.front = std::move(res.front);
      cell.outcome_records = res.outcome_records;
      break;
    }
    case Algorithm::nsga2: {
      EaSettings ea;
      ea.population = settings.init_size;
      ea.generations = settings.iterations / settings.init_size;
      ea.seed = derive_seed(plan.seed, "nsga2", static_cast<std::uint64_t>(cell.macro_rep));
      auto res = nsga2_constrained(ea, r, space, evaluator, settings.reference, design);
      cell.hv_curve = std::move(res.hv_history);
      cell.front = std::move(res.front);
      cell.outcome_records = res.outcome_records;
      break;
    }
  }
  if (!reference.empty()) {
    const auto objectives = cell.front.objectives();
    cell.front.igd_plus = igd_plus(objectives, reference);
  }
}

}  // namespace

BenchmarkResult run_benchmark(const BenchmarkPlan& plan) {
  plan.validate();
  BenchmarkResult result;
  if (plan.reference_points > 0) {
    result.reference =
        reference_front(SimulatorSettings{}, plan.reference_points, plan.campaign.replications, plan.campaign.space);
  }
  std::vector<ObjectiveVector> reference;
  for (const auto& p : result.reference) reference.push_back(p.mean);

  for (double gamma : plan.gammas) {
    for (auto algo : plan.algorithms) {
      for (int m = 0; m < plan.macro_reps; ++m) {
        CellResult cell;
        cell.algorithm = algo;
        cell.gamma = gamma;
        cell.macro_rep = m;
        result.cells.push_back(std::move(cell));
      }
    }
  }

  // Cells are independent; each worker writes only to the cell it claimed.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.cells.size(); i = next++) {
      auto& cell = result.cells[i];
      try {
        run_cell(plan, reference, cell);
      } catch (const std::exception& e) {
        cell.error = e.what();
        cell.hv_curve.clear();
        cell.front = FrontReport{};
      }
    }
  };
  const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(plan.threads), result.cells.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

namespace {

std::vector<double> distinct_gammas(const BenchmarkResult& result) {
  std::vector<double> out;
  for (const auto& c : result.cells) {
    if (std::find(out.begin(), out.end(), c.gamma) == out.end()) out.push_back(c.gamma);
  }
  return out;
}

std::vector<Algorithm> distinct_algorithms(const BenchmarkResult& result) {
  std::vector<Algorithm> out;
  for (const auto& c : result.cells) {
    if (std::find(out.begin(), out.end(), c.algorithm) == out.end()) out.push_back(c.algorithm);
  }
  return out;
}

}  // namespace

std::vector<SummaryRow> summarize(const BenchmarkResult& result) {
  std::vector<SummaryRow> rows;
  for (double gamma : distinct_gammas(result)) {
    const std::size_t first = rows.size();
    for (auto algo : distinct_algorithms(result)) {
      SummaryRow row;
      row.algorithm = algo;
      row.gamma = gamma;
      double hv_sum = 0.0;
      double igd_sum = 0.0;
      bool igd_ok = true;
      for (const auto& c : result.cells) {
        if (c.algorithm != algo || c.gamma != gamma || !c.error.empty()) continue;
        ++row.completed;
        hv_sum += c.front.hv;
        if (c.front.igd_plus && std::isfinite(*c.front.igd_plus)) {
          igd_sum += *c.front.igd_plus;
        } else {
          igd_ok = false;
        }
      }
      if (row.completed == 0) continue;
      row.hv_mean = hv_sum / row.completed;
      if (igd_ok) row.igd_plus_mean = igd_sum / row.completed;
      rows.push_back(row);
    }
    if (rows.size() == first) continue;
    double best_hv = -std::numeric_limits<double>::infinity();
    double best_igd = std::numeric_limits<double>::infinity();
    for (std::size_t i = first; i < rows.size(); ++i) {
      best_hv = std::max(best_hv, rows[i].hv_mean);
      if (rows[i].igd_plus_mean) best_igd = std::min(best_igd, *rows[i].igd_plus_mean);
    }
    for (std::size_t i = first; i < rows.size(); ++i) {
      rows[i].best_hv = rows[i].hv_mean == best_hv;
      rows[i].best_igd_plus = rows[i].igd_plus_mean && *rows[i].igd_plus_mean == best_igd;
    }
  }
  return rows;
}

std::vector<double> mean_curve(const BenchmarkResult& result, Algorithm algorithm, double gamma) {
  std::vector<double> sum;
  int count = 0;
  for (const auto& c : result.cells) {
    if (c.algorithm != algorithm || c.gamma != gamma || !c.error.empty()) continue;
    if (sum.empty()) sum.assign(c.hv_curve.size(), 0.0);
    if (c.hv_curve.size() != sum.size()) throw StateError("HV curves of one algorithm differ in length");
    for (std::size_t b = 0; b < sum.size(); ++b) sum[b] += c.hv_curve[b];
    ++count;
  }
  for (auto& v : sum) v /= count;
  return sum;
}

std::optional<RankedFronts> rank_fronts(const BenchmarkResult& result, Algorithm algorithm, double gamma) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const auto& c = result.cells[i];
    if (c.algorithm == algorithm && c.gamma == gamma && c.error.empty()) idx.push_back(i);
  }
  if (idx.empty()) return std::nullopt;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return result.cells[a].front.hv > result.cells[b].front.hv; });
  return RankedFronts{idx.front(), idx[(idx.size() - 1) / 2], idx.back()};
}

std::string curves_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "algorithm,gamma,macro_rep,budget,hv\n";
  for (const auto& c : result.cells) {
    for (std::size_t b = 0; b < c.hv_curve.size(); ++b) {
      out << to_string(c.algorithm) << ',' << format_number(c.gamma) << ',' << c.macro_rep << ',' << (b + 1) << ','
          << format_number(c.hv_curve[b]) << '\n';
    }
  }
  return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "algorithm,gamma,hv_mean,igd_plus_mean\n";
  for (const auto& r : rows) {
    out << to_string(r.algorithm) << ',' << format_number(r.gamma) << ',' << format_number(r.hv_mean) << ','
        << (r.igd_plus_mean ? format_number(*r.igd_plus_mean) : std::string()) << '\n';
  }
  return out.str();
}

}  // namespace mogp

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

#include "mogp/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json_io.hpp"
#include "mogp/doe.hpp"
#include "mogp/records.hpp"
#include "mogp/rng.hpp"

namespace mogp {

namespace {

using json_io::json;

// Observations at the same configuration are pooled so the surrogate never
// sees duplicate rows.
std::vector<ReplicatedObservation> merge_duplicates(std::span<const ReplicatedObservation> observations) {
  std::vector<ReplicatedObservation> merged;
  for (const auto& obs : observations) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const ReplicatedObservation& m) { return m.config() == obs.config(); });
    if (it == merged.end()) {
      merged.push_back(obs);
    } else {
      auto outcomes = it->outcomes();
      outcomes.insert(outcomes.end(), obs.outcomes().begin(), obs.outcomes().end());
      *it = ReplicatedObservation::from_outcomes(it->config(), std::move(outcomes));
    }
  }
  return merged;
}

std::string describe(const Configuration& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += format_number(c[i]);
  }
  return out + "]";
}

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::design:
      return "design";
    case Phase::optimizing:
      return "optimizing";
    case Phase::exhausted:
      return "exhausted";
  }
  return "design";
}

void CampaignSettings::validate() const {
  if (space.dimension() == 0) throw DomainError("design space has no variables");
  if (init_size < 2) throw DomainError("initial design size must be at least 2");
  if (iterations < 0) throw DomainError("iterations must be >= 0");
  if (replications < 1) throw DomainError("replications must be >= 1");
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be finite and >= 0");
  if (!(ridge >= 0.0) || !std::isfinite(ridge)) throw DomainError("ridge weight must be finite and >= 0");
  if (gp_restarts < 1) throw DomainError("gp_restarts must be >= 1");
  if (!std::isfinite(reference.cost) || !std::isfinite(reference.neg_strength)) {
    throw DomainError("reference point must be finite");
  }
  pso.validate();
}

std::size_t select_incumbent(std::span<const double> scalarized_means, std::span<const double> pf,
                             const std::vector<bool>& majority_feasible) {
  if (scalarized_means.empty()) throw DomainError("select_incumbent: no observations");
  std::size_t best = scalarized_means.size();
  for (std::size_t i = 0; i < scalarized_means.size(); ++i) {
    if (majority_feasible[i] && (best == scalarized_means.size() || scalarized_means[i] < scalarized_means[best])) {
      best = i;
    }
  }
  if (best != scalarized_means.size()) return best;
  best = 0;
  for (std::size_t i = 1; i < scalarized_means.size(); ++i) {
    if (pf[i] > pf[best] || (pf[i] == pf[best] && scalarized_means[i] < scalarized_means[best])) best = i;
  }
  return best;
}

InfillDecision select_infill(const CampaignSettings& settings, std::span<const ReplicatedObservation> observations,
                             int iteration) {
  if (observations.empty()) throw StateError("cannot select an infill point without observations");
  const auto& space = settings.space;
  const auto merged = merge_duplicates(observations);

  ModelSummary summary;
  summary.iteration = iteration;
  summary.weights = next_weights(iteration, derive_seed(settings.seed, "weights"));
  summary.bounds = NormalizationBounds::from_observations(merged);

  TrainingSet training;
  std::vector<double> means, pf;
  std::vector<bool> feasible;
  std::vector<int> labels;
  for (const auto& obs : merged) {
    const auto s = scalarize_observation(obs, summary.weights, settings.rho, summary.bounds);
    training.inputs.push_back(space.encode(obs.config()));
    training.responses.push_back(s.mean);
    training.noise.push_back(s.variance_of_mean);
    means.push_back(s.mean);
    pf.push_back(obs.pf());
    feasible.push_back(obs.majority_feasible());
    labels.push_back(obs.majority_feasible() ? 1 : 0);
  }

  FitOptions fit_options;
  fit_options.restarts = settings.gp_restarts;
  const auto gp =
      StochasticKriging::fit(training, derive_seed(settings.seed, "gp", static_cast<std::uint64_t>(iteration)),
                             fit_options);
  const auto lr = fit_lr(training.inputs, labels, settings.ridge);

  const std::size_t incumbent = select_incumbent(means, pf, feasible);
  const double z_min = gp.predict(training.inputs[incumbent]).mean;

  // The swarm moves continuously; the acquisition is scored on the rounded
  // configuration that would actually be run.
  auto acquisition = [&](std::span<const double> unit) {
    const auto rounded = space.encode(space.decode(unit));
    const auto p = gp.predict(rounded);
    return cmei(mei(z_min, p.mean, p.ok_sd), predict_pf(lr, rounded));
  };
  PsoSettings pso = settings.pso;
  pso.seed = derive_seed(settings.seed, "pso", static_cast<std::uint64_t>(iteration));
  const auto best = pso_maximize(acquisition, space.dimension(), pso);

  summary.kernel = gp.params();
  summary.kernel_mean = gp.mean_constant();
  summary.log_likelihood = gp.log_likelihood();
  summary.feasibility = lr;
  summary.feasibility.objective_trace.clear();
  summary.incumbent = training.inputs[incumbent];
  summary.incumbent_prediction = z_min;
  summary.acquisition = best.value;
  summary.pso_iterations = best.iterations;
  return {space.decode(best.x), std::move(summary)};
}

Campaign Campaign::initialize(CampaignSettings settings) {
  settings.validate();
  auto design = latin_hypercube(settings.init_size, settings.space, derive_seed(settings.seed, "design"));
  return with_design(std::move(settings), std::move(design.points));
}

Campaign Campaign::with_design(CampaignSettings settings, std::vector<Configuration> design) {
  settings.validate();
  if (static_cast<int>(design.size()) != settings.init_size) {
    throw DomainError("initial design has " + std::to_string(design.size()) + " points, expected " +
                      std::to_string(settings.init_size));
  }
  for (const auto& c : design) settings.space.validate(c);
  Campaign c;
  c.settings_ = std::move(settings);
  c.design_ = std::move(design);
  c.design_told_.assign(c.design_.size(), false);
  return c;
}

Phase Campaign::phase() const {
  if (std::find(design_told_.begin(), design_told_.end(), false) != design_told_.end()) return Phase::design;
  return budget_exhausted() ? Phase::exhausted : Phase::optimizing;
}

std::vector<Configuration> Campaign::pending_design() const {
  std::vector<Configuration> out;
  for (std::size_t i = 0; i < design_.size(); ++i) {
    if (!design_told_[i]) out.push_back(design_[i]);
  }
  return out;
}

bool Campaign::matches(const Configuration& a, const Configuration& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-9 * std::max(1.0, std::abs(b[i]))) return false;
  }
  return true;
}

const Configuration& Campaign::suggest() {
  if (pending_) return *pending_;
  const auto untold = std::count(design_told_.begin(), design_told_.end(), false);
  if (untold > 0) {
    throw StateError("initial design incomplete: " + std::to_string(untold) + " design point(s) not yet told");
  }
  if (budget_exhausted()) {
    throw BudgetExhausted("budget exhausted: all " + std::to_string(settings_.budget()) +
                          " configurations have been evaluated");
  }
  auto decision = select_infill(settings_, observations_, iteration_ + 1);
  pending_ = std::move(decision.config);
  last_model_ = std::move(decision.summary);
  return *pending_;
}

const ReplicatedObservation& Campaign::tell(const Configuration& config, std::vector<Outcome> outcomes) {
  if (static_cast<int>(outcomes.size()) != settings_.replications) {
    throw DomainError("expected " + std::to_string(settings_.replications) + " replication outcomes, got " +
                      std::to_string(outcomes.size()));
  }
  if (pending_ && matches(config, *pending_)) {
    observations_.push_back(ReplicatedObservation::from_outcomes(*pending_, std::move(outcomes)));
    pending_.reset();
    ++iteration_;
    return observations_.back();
  }
  for (std::size_t i = 0; i < design_.size(); ++i) {
    if (!design_told_[i] && matches(config, design_[i])) {
      observations_.push_back(ReplicatedObservation::from_outcomes(design_[i], std::move(outcomes)));
      design_told_[i] = true;
      return observations_.back();
    }
  }
  throw DomainError("configuration " + describe(config) +
                    " is neither the pending suggestion nor an untold design point");
}

FrontReport Campaign::current_front() const {
  return make_front_report(observations_, settings_.reference, settings_.space);
}

std::vector<double> Campaign::hv_history() const {
  std::vector<double> out;
  out.reserve(observations_.size());
  std::vector<ObjectiveVector> archive;
  for (const auto& obs : observations_) {
    if (obs.majority_feasible()) {
      archive.push_back(obs.mean_objectives());
      // Only the non-dominated part matters for the hypervolume.
      std::vector<ObjectiveVector> front;
      for (auto i : pareto_filter(archive)) front.push_back(archive[i]);
      archive = std::move(front);
    }
    out.push_back(hypervolume(archive, settings_.reference));
  }
  return out;
}

std::string Campaign::serialize() const {
  json doc;
  doc["schema_version"] = kCampaignSchemaVersion;
  doc["kind"] = "mogp-campaign";
  doc["settings"] = json_io::to_json(settings_);
  json design = json::array();
  for (std::size_t i = 0; i < design_.size(); ++i) {
    design.push_back({{"config", json_io::to_json(design_[i], settings_.space)}, {"told", bool(design_told_[i])}});
  }
  doc["design"] = std::move(design);
  json obs = json::array();
  for (const auto& o : observations_) {
    json outcomes = json::array();
    for (const auto& out : o.outcomes()) outcomes.push_back(json_io::to_json(out));
    obs.push_back({{"config", json_io::to_json(o.config(), settings_.space)}, {"outcomes", std::move(outcomes)}});
  }
  doc["observations"] = std::move(obs);
  doc["iteration"] = iteration_;
  // Every random stream is derived from the root seed and the iteration
  // number, so these fully determine the remaining random sequence.
  doc["rng"] = {{"root_seed", settings_.seed},
                {"weight_cursor", iteration_},
                {"streams", {"design", "weights", "gp", "pso"}}};
  doc["pending_suggestion"] = pending_ ? json_io::to_json(*pending_, settings_.space) : json(nullptr);
  doc["last_model"] = last_model_ ? json_io::to_json(*last_model_) : json(nullptr);
  return doc.dump(2) + "\n";
}

Campaign Campaign::deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("campaign document is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("schema_version")) throw FormatError("campaign document has no schema_version");
    const int version = doc.at("schema_version").get<int>();
    if (version != kCampaignSchemaVersion) {
      throw FormatError("unsupported campaign schema_version " + std::to_string(version) + " (expected " +
                        std::to_string(kCampaignSchemaVersion) + ")");
    }
    Campaign c;
    c.settings_ = json_io::settings_from_json(doc.at("settings"));
    c.settings_.validate();
    const auto& space = c.settings_.space;
    for (const auto& d : doc.at("design")) {
      c.design_.push_back(json_io::configuration_from_json(d.at("config"), space));
      c.design_told_.push_back(d.at("told").get<bool>());
    }
    if (static_cast<int>(c.design_.size()) != c.settings_.init_size) throw FormatError("design size mismatch");
    for (const auto& o : doc.at("observations")) {
      std::vector<Outcome> outcomes;
      for (const auto& out : o.at("outcomes")) outcomes.push_back(json_io::outcome_from_json(out));
      if (static_cast<int>(outcomes.size()) != c.settings_.replications) {
        throw FormatError("observation with the wrong replication count");
      }
      c.observations_.push_back(ReplicatedObservation::from_outcomes(
          json_io::configuration_from_json(o.at("config"), space), std::move(outcomes)));
    }
    c.iteration_ = doc.at("iteration").get<int>();
    const auto told = std::count(c.design_told_.begin(), c.design_told_.end(), true);
    if (c.iteration_ < 0 || c.iteration_ > c.settings_.iterations ||
        static_cast<std::size_t>(told + c.iteration_) != c.observations_.size()) {
      throw FormatError("campaign counters are inconsistent with the observation list");
    }
    if (!doc.at("pending_suggestion").is_null()) {
      c.pending_ = json_io::configuration_from_json(doc.at("pending_suggestion"), space);
    }
    if (!doc.at("last_model").is_null()) c.last_model_ = json_io::model_summary_from_json(doc.at("last_model"));
    return c;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("corrupt campaign document: ") + e.what());
  }
}

void Campaign::save(const std::filesystem::path& path) const {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << serialize();
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot replace " + path.string() + ": " + ec.message());
}

Campaign Campaign::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

RunResult run(const CampaignSettings& settings, const Evaluator& evaluator) {
  auto campaign = Campaign::initialize(settings);
  auto design = campaign.design();
  return run(settings, std::move(design), evaluator);
}

RunResult run(const CampaignSettings& settings, std::vector<Configuration> design, const Evaluator& evaluator) {
  RunResult result{Campaign::with_design(settings, std::move(design)), {}, 0};
  auto& c = result.campaign;
  const auto initial = c.design();
  for (const auto& config : initial) {
    auto outcomes = evaluator(config);
    result.outcome_records += outcomes.size();
    c.tell(config, std::move(outcomes));
  }
  while (!c.budget_exhausted()) {
    const Configuration next = c.suggest();
    auto outcomes = evaluator(next);
    result.outcome_records += outcomes.size();
    c.tell(next, std::move(outcomes));
  }
  result.hv_history = c.hv_history();
  return result;
}

}  // namespace mogp

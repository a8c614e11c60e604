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

#include "mogp/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "mogp/benchmark.hpp"
#include "mogp/campaign.hpp"
#include "mogp/errors.hpp"
#include "mogp/records.hpp"
#include "mogp/simulator.hpp"

namespace mogp {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

Campaign load_state(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("state file " + path.string() + " does not exist");
  try {
    return Campaign::load(path);
  } catch (const FormatError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

void save_state(const Campaign& campaign, const fs::path& path) {
  try {
    campaign.save(path);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_number(std::string_view(text).substr(start, end - start), "gamma"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Budget flags shared by run and suggest (when suggest creates the state).
struct BudgetFlags {
  int budget = 60;
  int init = 20;
  int reps = 5;
  std::uint64_t seed = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Total configurations k + I")->capture_default_str();
    cmd->add_option("--init", init, "Initial design size k")->capture_default_str();
    cmd->add_option("--reps", reps, "Replications per configuration")->capture_default_str();
    cmd->add_option("--seed", seed, "Root seed")->capture_default_str();
  }

  CampaignSettings settings() const {
    if (budget < init) {
      throw DomainError("--budget " + std::to_string(budget) + " is smaller than --init " + std::to_string(init));
    }
    CampaignSettings s;
    s.init_size = init;
    s.iterations = budget - init;
    s.replications = reps;
    s.seed = seed;
    s.validate();
    return s;
  }
};

int cmd_run(const BudgetFlags& flags, double gamma, const std::string& state, const std::string& out_csv,
            std::ostream& out) {
  const auto settings = flags.settings();
  SimulatorSettings sim;
  sim.gamma = gamma;
  sim.seed = settings.seed;
  sim.validate();
  Simulator simulator(sim, settings.space);
  auto result = run(settings, [&](const Configuration& c) { return simulator.evaluate(c, settings.replications); });
  const auto front = result.campaign.current_front();
  if (!state.empty()) save_state(result.campaign, state);
  const auto csv = front_report_csv(front, settings.space);
  if (!out_csv.empty()) {
    write_file(out_csv, csv);
  } else {
    out << csv;
  }
  out << "configurations=" << result.campaign.observations().size() << " outcomes=" << result.outcome_records
      << " front=" << front.points.size() << " hv=" << format_number(front.hv) << '\n';
  return kExitOk;
}

int cmd_suggest(const BudgetFlags& flags, const std::string& state, std::ostream& out) {
  Campaign campaign = fs::exists(state) ? load_state(state) : Campaign::initialize(flags.settings());
  if (campaign.phase() == Phase::design) {
    const auto pending = campaign.pending_design();
    save_state(campaign, state);
    out << format_configuration(pending.front(), campaign.settings().space) << '\n';
    return kExitOk;
  }
  const Configuration next = campaign.suggest();
  save_state(campaign, state);
  out << format_configuration(next, campaign.settings().space) << '\n';
  return kExitOk;
}

int cmd_tell(const std::string& state, const std::string& config, const std::string& outcomes_path,
             std::ostream& out) {
  Campaign campaign = load_state(state);
  const auto& space = campaign.settings().space;
  const auto c = parse_configuration(config, space);
  const auto text = outcomes_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                         : read_file(outcomes_path);
  auto outcomes = parse_outcomes_csv(text);
  const auto& obs = campaign.tell(c, std::move(outcomes));
  save_state(campaign, state);
  out << "pf=" << format_number(obs.pf()) << " strength_mean=" << format_number(-obs.mean_objectives().neg_strength)
      << " cost_mean=" << format_number(obs.mean_objectives().cost) << " phase=" << to_string(campaign.phase())
      << '\n';
  return kExitOk;
}

int cmd_front(const std::string& state, const std::string& reference, const std::string& out_csv,
              std::ostream& out) {
  const Campaign campaign = load_state(state);
  auto front = campaign.current_front();
  if (!reference.empty()) {
    const auto ref = parse_front_report_csv(read_file(reference), campaign.settings().space);
    front.igd_plus = igd_plus(front.objectives(), ref.objectives());
  }
  const auto csv = front_report_csv(front, campaign.settings().space);
  if (out_csv.empty()) {
    out << csv;
  } else {
    write_file(out_csv, csv);
  }
  return kExitOk;
}

std::string gamma_tag(double gamma) { return "g" + format_number(gamma); }

int cmd_benchmark(const BenchmarkPlan& plan, const std::string& dir, std::ostream& out) {
  const auto result = run_benchmark(plan);
  const fs::path root(dir);
  write_file(root / "curves.csv", curves_csv(result));
  const auto rows = summarize(result);
  write_file(root / "summary.csv", summary_csv(rows));
  for (const auto& cell : result.cells) {
    if (!cell.error.empty()) continue;
    const auto name = std::string(to_string(cell.algorithm)) + "_" + gamma_tag(cell.gamma) + "_rep" +
                      std::to_string(cell.macro_rep) + ".csv";
    write_file(root / "fronts" / name, front_report_csv(cell.front, plan.campaign.space));
  }
  if (!result.reference.empty()) {
    FrontReport ref;
    ref.points = result.reference;
    ref.hv = hypervolume(ref.objectives(), plan.campaign.reference);
    write_file(root / "reference_front.csv", front_report_csv(ref, plan.campaign.space));
  }
  int failed = 0;
  for (const auto& cell : result.cells) {
    if (!cell.error.empty()) {
      ++failed;
      out << "failed: " << to_string(cell.algorithm) << " gamma=" << format_number(cell.gamma)
          << " macro_rep=" << cell.macro_rep << ": " << cell.error << '\n';
    }
  }
  for (const auto& row : rows) {
    out << to_string(row.algorithm) << " gamma=" << format_number(row.gamma) << " hv_mean=" << format_number(row.hv_mean)
        << " igd_plus_mean=" << (row.igd_plus_mean ? format_number(*row.igd_plus_mean) : std::string("missing"))
        << (row.best_hv ? " [best hv]" : "") << '\n';
  }
  out << "cells=" << result.cells.size() << " failed=" << failed << '\n';
  return kExitOk;
}

int cmd_reference_front(int n, int reps, const std::string& out_csv, std::ostream& out) {
  if (n < 1) throw DomainError("--n must be >= 1");
  if (reps < 1) throw DomainError("--reps must be >= 1");
  FrontReport report;
  report.points = reference_front(SimulatorSettings{}, n, reps);
  report.hv = hypervolume(report.objectives(), kDefaultReference);
  const auto csv = front_report_csv(report);
  if (out_csv.empty()) {
    out << csv;
  } else {
    write_file(out_csv, csv);
    out << "points=" << report.points.size() << " hv=" << format_number(report.hv) << '\n';
  }
  return kExitOk;
}

int cmd_analyze_inputs(const std::vector<std::string>& fronts, const std::string& out_csv, std::ostream& out) {
  std::vector<FrontReport> reports;
  for (const auto& path : fronts) reports.push_back(parse_front_report_csv(read_file(path)));
  const auto csv = input_distribution_csv(input_distribution(reports));
  if (out_csv.empty()) {
    out << csv;
  } else {
    write_file(out_csv, csv);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained multi-objective Bayesian optimization of plasma-treatment settings", "mogp"};
  app.require_subcommand(1);

  BudgetFlags run_flags;
  double run_gamma = 0.30;
  std::string run_state, run_out;
  auto* run_cmd = app.add_subcommand("run", "Full optimization against the built-in simulator");
  run_flags.add(run_cmd);
  run_cmd->add_option("--gamma", run_gamma, "Relative contact-angle noise")->capture_default_str();
  run_cmd->add_option("--state", run_state, "Write the final campaign state here");
  run_cmd->add_option("--out", run_out, "Front CSV path (stdout if omitted)");

  BudgetFlags suggest_flags;
  std::string suggest_state;
  auto* suggest_cmd = app.add_subcommand("suggest", "Print the next configuration to evaluate");
  suggest_cmd->add_option("--state", suggest_state, "Campaign state file (created if missing)")->required();
  suggest_flags.add(suggest_cmd);

  std::string tell_state, tell_config, tell_outcomes;
  auto* tell_cmd = app.add_subcommand("tell", "Record the measured outcomes of one configuration");
  tell_cmd->add_option("--state", tell_state, "Campaign state file")->required();
  tell_cmd->add_option("--config", tell_config, "Configuration record v1=..,v6=..")->required();
  tell_cmd->add_option("--outcomes", tell_outcomes, "Outcome CSV file, one replication per row ('-' for stdin)")
      ->required();

  std::string front_state, front_reference, front_out;
  auto* front_cmd = app.add_subcommand("front", "Export the current Pareto front");
  front_cmd->add_option("--state", front_state, "Campaign state file")->required();
  front_cmd->add_option("--reference", front_reference, "Reference front CSV for IGD+");
  front_cmd->add_option("--out", front_out, "Output CSV (stdout if omitted)");

  BenchmarkPlan plan;
  plan.macro_reps = 50;
  std::string bench_algos = "mo-gp,random,nsga2", bench_gammas = "0,0.30", bench_out;
  int bench_budget = 60, bench_init = 20, bench_reps = 5;
  auto* bench_cmd = app.add_subcommand("benchmark", "Macro-replicated comparison of optimizers");
  bench_cmd->add_option("--algos", bench_algos, "Comma-separated subset of mo-gp,random,nsga2")->capture_default_str();
  bench_cmd->add_option("--macro-reps", plan.macro_reps, "Macro-replications")->capture_default_str();
  bench_cmd->add_option("--gamma", bench_gammas, "Comma-separated noise levels")->capture_default_str();
  bench_cmd->add_option("--seed", plan.seed, "Root seed")->capture_default_str();
  bench_cmd->add_option("--budget", bench_budget, "Configurations per run")->capture_default_str();
  bench_cmd->add_option("--init", bench_init, "Initial design size")->capture_default_str();
  bench_cmd->add_option("--reps", bench_reps, "Replications per configuration")->capture_default_str();
  bench_cmd->add_option("--reference-points", plan.reference_points, "Halton points for the IGD+ reference (0 = off)")
      ->capture_default_str();
  bench_cmd->add_option("--threads", plan.threads, "Worker threads")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "Output directory")->required();

  int ref_n = 20000, ref_reps = 5;
  std::string ref_out;
  auto* ref_cmd = app.add_subcommand("reference-front", "Noise-free Halton estimate of the ideal front");
  ref_cmd->add_option("--n", ref_n, "Halton configurations")->capture_default_str();
  ref_cmd->add_option("--reps", ref_reps, "Replications per configuration")->capture_default_str();
  ref_cmd->add_option("--out", ref_out, "Output CSV (stdout if omitted)");

  std::vector<std::string> analyze_fronts;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze-inputs", "Percentiles and histograms of Pareto-optimal inputs");
  analyze_cmd->add_option("--fronts", analyze_fronts, "Front CSV files")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--out", analyze_out, "Output CSV (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, run_gamma, run_state, run_out, out);
    if (*suggest_cmd) return cmd_suggest(suggest_flags, suggest_state, out);
    if (*tell_cmd) return cmd_tell(tell_state, tell_config, tell_outcomes, out);
    if (*front_cmd) return cmd_front(front_state, front_reference, front_out, out);
    if (*bench_cmd) {
      plan.algorithms = parse_algorithm_list(bench_algos);
      plan.gammas = parse_gamma_list(bench_gammas);
      BudgetFlags b{bench_budget, bench_init, bench_reps, plan.seed};
      plan.campaign = b.settings();
      return cmd_benchmark(plan, bench_out, out);
    }
    if (*ref_cmd) return cmd_reference_front(ref_n, ref_reps, ref_out, out);
    if (*analyze_cmd) return cmd_analyze_inputs(analyze_fronts, analyze_out, out);
  } catch (const StateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitState;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace mogp

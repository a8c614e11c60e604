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

#include "mogp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mogp/doe.hpp"
#include "mogp/errors.hpp"
#include "mogp/records.hpp"

namespace mogp {

double hypervolume(std::span<const ObjectiveVector> front, const ObjectiveVector& ref) {
  std::vector<ObjectiveVector> pts;
  pts.reserve(front.size());
  for (const auto& p : front) {
    if (strictly_dominates(p, ref)) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.neg_strength < b.neg_strength);
  });
  double volume = 0.0;
  double level = ref.neg_strength;
  for (const auto& p : pts) {
    if (p.neg_strength < level) {
      volume += (ref.cost - p.cost) * (level - p.neg_strength);
      level = p.neg_strength;
    }
  }
  return volume;
}

double igd_plus_distance(const ObjectiveVector& a, const ObjectiveVector& z) {
  const double d1 = std::max(a.cost - z.cost, 0.0);
  const double d2 = std::max(a.neg_strength - z.neg_strength, 0.0);
  return std::sqrt(d1 * d1 + d2 * d2);
}

double igd_plus(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference) {
  if (reference.empty()) throw DomainError("igd_plus: reference front is empty");
  if (front.empty()) return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (const auto& z : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : front) best = std::min(best, igd_plus_distance(a, z));
    total += best;
  }
  return total / static_cast<double>(reference.size());
}

std::vector<ObjectiveVector> FrontReport::objectives() const {
  std::vector<ObjectiveVector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.mean);
  return out;
}

FrontReport make_front_report(std::span<const ReplicatedObservation> observations, const ObjectiveVector& ref,
                              const DesignSpace& space) {
  std::vector<const ReplicatedObservation*> feasible;
  std::vector<ObjectiveVector> means;
  for (const auto& o : observations) {
    if (o.majority_feasible()) {
      feasible.push_back(&o);
      means.push_back(o.mean_objectives());
    }
  }
  FrontReport report;
  for (std::size_t i : pareto_filter(means)) {
    report.points.push_back({feasible[i]->config(), feasible[i]->mean_objectives(), feasible[i]->pf()});
  }
  report.hv = hypervolume(report.objectives(), ref);
  (void)space;
  return report;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw DomainError("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

InputDistribution input_distribution(std::span<const FrontReport> fronts, const DesignSpace& space) {
  InputDistribution dist;
  std::vector<std::vector<double>> columns(space.dimension());
  for (const auto& f : fronts) {
    for (const auto& p : f.points) {
      for (std::size_t k = 0; k < space.dimension(); ++k) columns[k].push_back(p.config.values.at(k));
    }
  }
  dist.pooled = columns.empty() ? 0 : columns.front().size();
  if (dist.pooled == 0) return dist;

  for (std::size_t k = 0; k < space.dimension(); ++k) {
    const auto& var = space.variable(k);
    VariableDistribution vd;
    vd.id = var.id;
    vd.p25 = percentile(columns[k], 0.25);
    vd.p50 = percentile(columns[k], 0.50);
    vd.p75 = percentile(columns[k], 0.75);
    vd.lower = var.lower;
    vd.upper = var.upper;
    vd.histogram.assign(kHistogramBins, 0);
    const double width = (var.upper - var.lower) / kHistogramBins;
    for (double x : columns[k]) {
      auto bin = static_cast<int>(std::floor((x - var.lower) / width));
      bin = std::clamp(bin, 0, kHistogramBins - 1);
      ++vd.histogram[static_cast<std::size_t>(bin)];
    }
    if (var.kind == VariableKind::binary && k == 0) {
      double ones = 0.0;
      for (double x : columns[k]) ones += x;
      dist.preprocessing_fraction = ones / static_cast<double>(columns[k].size());
    }
    dist.variables.push_back(std::move(vd));
  }
  return dist;
}

std::vector<FrontPoint> reference_front(const SimulatorSettings& settings, int n, int r, const DesignSpace& space) {
  SimulatorSettings ideal = settings;
  ideal.gamma = 0.0;
  Simulator sim(ideal, space);
  const auto design = halton(n, space);
  std::vector<ReplicatedObservation> obs;
  obs.reserve(design.points.size());
  for (const auto& c : design.points) obs.push_back(ReplicatedObservation::from_outcomes(c, sim.evaluate(c, r)));
  return make_front_report(obs, kDefaultReference, space).points;
}

std::string front_report_csv(const FrontReport& report, const DesignSpace& space) {
  std::ostringstream os;
  os << "kind";
  for (const auto& v : space.variables()) os << ',' << v.id;
  os << ",strength_mean,cost_mean,pf,hv,igd_plus\n";
  for (const auto& p : report.points) {
    os << "point";
    for (double x : p.config.values) os << ',' << format_number(x);
    os << ',' << format_number(-p.mean.neg_strength) << ',' << format_number(p.mean.cost) << ','
       << format_number(p.pf) << ",,\n";
  }
  os << "summary";
  for (std::size_t k = 0; k < space.dimension() + 3; ++k) os << ',';
  os << ',' << format_number(report.hv) << ',';
  if (report.igd_plus && std::isfinite(*report.igd_plus)) os << format_number(*report.igd_plus);
  os << '\n';
  return os.str();
}

FrontReport parse_front_report_csv(const std::string& text, const DesignSpace& space) {
  std::istringstream is(text);
  std::string line;
  FrontReport report;
  const std::size_t d = space.dimension();
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (header) {
      if (cells.empty() || cells[0] != "kind") throw FormatError("front CSV: missing header");
      header = false;
      continue;
    }
    if (cells.size() != d + 6) throw FormatError("front CSV: row has " + std::to_string(cells.size()) + " cells");
    try {
      if (cells[0] == "point") {
        FrontPoint p;
        for (std::size_t k = 0; k < d; ++k) p.config.values.push_back(parse_number(cells[k + 1], space.variable(k).id));
        p.mean.neg_strength = -parse_number(cells[d + 1], "strength_mean");
        p.mean.cost = parse_number(cells[d + 2], "cost_mean");
        p.pf = parse_number(cells[d + 3], "pf");
        report.points.push_back(std::move(p));
      } else if (cells[0] == "summary") {
        if (!cells[d + 4].empty()) report.hv = parse_number(cells[d + 4], "hv");
        if (!cells[d + 5].empty()) report.igd_plus = parse_number(cells[d + 5], "igd_plus");
      } else {
        throw FormatError("front CSV: unknown row kind '" + cells[0] + "'");
      }
    } catch (const DomainError& e) {
      throw FormatError(std::string("front CSV: ") + e.what());
    }
  }
  if (header) throw FormatError("front CSV: empty document");
  return report;
}

std::string input_distribution_csv(const InputDistribution& dist) {
  std::ostringstream os;
  os << "variable,p25,p50,p75,lower,upper";
  for (int b = 0; b < kHistogramBins; ++b) os << ",bin" << b;
  os << '\n';
  for (const auto& v : dist.variables) {
    os << v.id << ',' << format_number(v.p25) << ',' << format_number(v.p50) << ',' << format_number(v.p75) << ','
       << format_number(v.lower) << ',' << format_number(v.upper);
    for (auto c : v.histogram) os << ',' << c;
    os << '\n';
  }
  os << "# pooled=" << dist.pooled << ",preprocessing_fraction=" << format_number(dist.preprocessing_fraction)
     << '\n';
  return os.str();
}

}  // namespace mogp

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

#include "mogp/records.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "mogp/errors.hpp"

namespace mogp {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_separator(char c) { return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool parse_bool(std::string_view text, std::string_view field) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw DomainError(std::string(field) + ": expected true or false, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw DomainError(std::string(field) + ": '" + std::string(text) + "' is not a finite number");
  }
  return value;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    const auto pair = text.substr(i, j - i);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw DomainError("malformed key=value pair '" + std::string(pair) + "'");
    }
    std::string key(pair.substr(0, eq));
    if (!out.emplace(key, std::string(pair.substr(eq + 1))).second) {
      throw DomainError("key '" + key + "' given twice");
    }
    i = j;
  }
  return out;
}

std::string format_configuration(const Configuration& config, const DesignSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    if (i) out += ',';
    out += space.variable(i).id;
    out += '=';
    out += format_number(config.values.at(i));
  }
  return out;
}

Configuration parse_configuration(std::string_view record, const DesignSpace& space) {
  const auto kv = parse_key_values(record);
  std::vector<double> values(space.dimension());
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const auto& id = space.variable(i).id;
    const auto it = kv.find(id);
    if (it == kv.end()) throw DomainError("configuration record is missing " + id);
    values[i] = parse_number(it->second, id);
  }
  for (const auto& [key, _] : kv) space.index_of(key);
  Configuration config{std::move(values)};
  space.validate(config);
  return config;
}

std::string format_outcome(const Outcome& outcome) {
  std::ostringstream os;
  os << "strength=" << format_number(outcome.strength) << ",cost=" << format_number(outcome.cost)
     << ",failure_mode=" << to_string(outcome.failure_mode)
     << ",visual_damage=" << (outcome.visual_damage ? "true" : "false");
  return os.str();
}

Outcome parse_outcome(std::string_view record) {
  const auto kv = parse_key_values(record);
  auto get = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw DomainError(std::string("outcome record is missing ") + key);
    return it->second;
  };
  Outcome o;
  o.strength = parse_number(get("strength"), "strength");
  o.cost = parse_number(get("cost"), "cost");
  o.failure_mode = parse_failure_mode(get("failure_mode"));
  o.visual_damage = parse_bool(get("visual_damage"), "visual_damage");
  if (kv.size() != 4) throw DomainError("outcome record has unknown fields");
  return o;
}

std::string format_outcomes_csv(const std::vector<Outcome>& outcomes) {
  std::string out = "strength,cost,failure_mode,visual_damage\n";
  for (const auto& o : outcomes) {
    out += format_number(o.strength) + ',' + format_number(o.cost) + ',' +
           std::string(to_string(o.failure_mode)) + ',' + (o.visual_damage ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<Outcome> parse_outcomes_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    const auto line = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (lines.empty()) throw DomainError("outcome table is empty");

  const auto header = split_csv_line(lines.front());
  int col_strength = -1, col_cost = -1, col_mode = -1, col_damage = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "strength") col_strength = static_cast<int>(c);
    else if (header[c] == "cost") col_cost = static_cast<int>(c);
    else if (header[c] == "failure_mode") col_mode = static_cast<int>(c);
    else if (header[c] == "visual_damage") col_damage = static_cast<int>(c);
    else throw DomainError("unknown outcome column '" + std::string(header[c]) + "'");
  }
  if (col_strength < 0 || col_cost < 0 || col_mode < 0 || col_damage < 0) {
    throw DomainError("outcome table header must name strength, cost, failure_mode, visual_damage");
  }

  std::vector<Outcome> out;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto cells = split_csv_line(lines[l]);
    if (cells.size() != header.size()) {
      throw DomainError("outcome row " + std::to_string(l) + " has " + std::to_string(cells.size()) +
                        " cells, expected " + std::to_string(header.size()));
    }
    Outcome o;
    o.strength = parse_number(cells[col_strength], "strength");
    o.cost = parse_number(cells[col_cost], "cost");
    o.failure_mode = parse_failure_mode(cells[col_mode]);
    o.visual_damage = parse_bool(cells[col_damage], "visual_damage");
    out.push_back(o);
  }
  return out;
}

}  // namespace mogp

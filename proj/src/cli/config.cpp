// Copyright 2026 The catfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>

#include "catfilter/cli.hpp"

namespace catfilter::cli {
namespace {

constexpr int kMinCutoff = 4;
constexpr int kMaxCutoff = 60;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const std::string& where) {
  const std::string_view s = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(where + ": not a number: '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view text, const std::string& where) {
  const std::string_view s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(where + ": not an integer: '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text, const std::string& where) {
  const std::string_view s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw UsageError(where + ": expected true or false, got '" + std::string(s) + "'");
}

}  // namespace

std::vector<double> SweepRange::values() const {
  if (points < 2) throw UsageError("a sweep needs at least 2 points");
  if (!(min < max)) throw UsageError("sweep minimum must be below its maximum");
  if (log && !(min > 0.0)) throw UsageError("log-spaced sweep needs a positive minimum");
  std::vector<double> v(static_cast<std::size_t>(points));
  const double lo = log ? std::log10(min) : min;
  const double hi = log ? std::log10(max) : max;
  const double den = points - 1;
  for (int i = 0; i < points; ++i) {
    // Weighted form keeps symmetric sweeps exact at the centre.
    const double x = (lo * (den - i) + hi * i) / den;
    v[static_cast<std::size_t>(i)] = log ? std::pow(10.0, x) : x;
  }
  v.front() = min;
  v.back() = max;
  return v;
}

void RunConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw UsageError("--gamma must be positive");
  if (epsilon_list.empty()) throw UsageError("at least one --epsilon is required");
  for (double e : epsilon_list) {
    if (!(e >= 0.0)) throw UsageError("--epsilon must be non-negative");
    if (!(e < gamma)) throw UsageError("--epsilon must stay below --gamma (oscillation threshold)");
  }
  if (!(big_gamma > 0.0) || !std::isfinite(big_gamma)) throw UsageError("--big-gamma must be positive");
  if (cutoff < kMinCutoff || cutoff > kMaxCutoff) throw UsageError("--cutoff must lie in [4, 60]");
  if (gamma_rel_points && *gamma_rel_points < 2) throw UsageError("--gamma-rel-points must be at least 2");
}

SweepRange RunConfig::gamma_rel_range(const SweepRange& fallback) const {
  return {gamma_rel_min.value_or(fallback.min), gamma_rel_max.value_or(fallback.max),
          gamma_rel_points.value_or(fallback.points), gamma_rel_log.value_or(fallback.log)};
}

void apply_config_text(RunConfig& cfg, std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string_view::npos) throw UsageError(where + ": expected key = value");
    const std::string key(trim(body.substr(0, eq)));
    const std::string_view value = trim(body.substr(eq + 1));

    if (key == "gamma") {
      cfg.gamma = parse_double(value, where);
    } else if (key == "epsilon") {
      cfg.epsilon_list.clear();
      std::string_view rest = value;
      while (true) {
        const auto comma = rest.find(',');
        cfg.epsilon_list.push_back(parse_double(rest.substr(0, comma), where));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else if (key == "big_gamma") {
      cfg.big_gamma = parse_double(value, where);
    } else if (key == "gamma_rel_min") {
      cfg.gamma_rel_min = parse_double(value, where);
    } else if (key == "gamma_rel_max") {
      cfg.gamma_rel_max = parse_double(value, where);
    } else if (key == "gamma_rel_points") {
      cfg.gamma_rel_points = parse_int(value, where);
    } else if (key == "gamma_rel_log") {
      cfg.gamma_rel_log = parse_bool(value, where);
    } else if (key == "cutoff") {
      cfg.cutoff = parse_int(value, where);
    } else if (key == "out") {
      cfg.output_dir = std::string(value);
    } else if (key == "format") {
      if (value == "csv") {
        cfg.format = Format::kCsv;
      } else if (value == "json") {
        cfg.format = Format::kJson;
      } else {
        throw UsageError(where + ": format must be csv or json");
      }
    } else {
      throw UsageError(where + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open config file " + file.string());
  apply_config_text(cfg, in, file.string());
}

}  // namespace catfilter::cli

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

#ifndef CATFILTER_CLI_HPP
#define CATFILTER_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catfilter/errors.hpp"

namespace catfilter::cli {

/// Bad flags, bad config values, out-of-range parameters. Exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { kCsv, kJson };

struct SweepRange {
  double min;
  double max;
  int points;
  bool log;

  std::vector<double> values() const;
};

struct RunConfig {
  double gamma = 1.0;
  std::vector<double> epsilon_list = {0.03, 0.3, 0.7};
  /// Unset means the subcommand default (see README).
  std::optional<double> gamma_rel_min;
  std::optional<double> gamma_rel_max;
  std::optional<int> gamma_rel_points;
  std::optional<bool> gamma_rel_log;
  double big_gamma = 0.4;
  int cutoff = 40;
  std::filesystem::path output_dir = ".";
  Format format = Format::kCsv;

  /// Throws UsageError.
  void validate() const;
  /// Fills unset range fields from `fallback`.
  SweepRange gamma_rel_range(const SweepRange& fallback) const;
};

/// Applies `key = value` lines ('#' starts a comment) on top of `cfg`.
/// Keys: gamma, epsilon (comma separated), big_gamma, gamma_rel_min,
/// gamma_rel_max, gamma_rel_points, gamma_rel_log, cutoff, out, format.
void apply_config_text(RunConfig& cfg, std::istream& in, const std::string& origin);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& file);

/// Column table written as CSV (`%.12e`) or JSON with the same layout.
struct Table {
  std::string stem;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_number(double x);
std::filesystem::path write_table(const Table& t, const RunConfig& cfg);

// Subcommands. Each writes its files, lists them on `log` and returns the exit
// status: 0 success, 1 numeric check failure.
int cmd_spectrum(const RunConfig& cfg, std::ostream& log);
int cmd_correlation(const RunConfig& cfg, std::ostream& log);
int cmd_equivloss(const RunConfig& cfg, std::ostream& log);
int cmd_modefuncs(const RunConfig& cfg, std::ostream& log);
int cmd_modematch(const RunConfig& cfg, std::ostream& log);

struct CheckResult {
  std::string name;
  double value;
  double tolerance;
  bool pass;
};

/// Runs the invariant suite. A name in `corrupt` has its tolerance forced to
/// a negative value so that the check fails (exercises the failure path).
std::vector<CheckResult> run_checks(const RunConfig& cfg, const std::vector<std::string>& corrupt = {});
int cmd_verify(const RunConfig& cfg, std::ostream& log, const std::vector<std::string>& corrupt = {});

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catfilter::cli

#endif  // CATFILTER_CLI_HPP

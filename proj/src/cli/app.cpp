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

#include <cstdlib>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "catfilter/cli.hpp"

namespace catfilter::cli {
namespace {

struct Flags {
  std::optional<double> gamma;
  std::vector<double> epsilon;
  std::optional<double> big_gamma;
  std::optional<double> gamma_rel_min;
  std::optional<double> gamma_rel_max;
  std::optional<int> gamma_rel_points;
  std::optional<std::string> gamma_rel_log;
  std::optional<int> cutoff;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> config;
  std::vector<std::string> corrupt;
};

// Defaults, then CATFILTER_OUT, then the config file, then flags.
RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (const char* env = std::getenv("CATFILTER_OUT"); env != nullptr && *env != '\0') cfg.output_dir = env;
  if (f.config) apply_config_file(cfg, *f.config);
  if (f.gamma) cfg.gamma = *f.gamma;
  if (!f.epsilon.empty()) cfg.epsilon_list = f.epsilon;
  if (f.big_gamma) cfg.big_gamma = *f.big_gamma;
  if (f.gamma_rel_min) cfg.gamma_rel_min = f.gamma_rel_min;
  if (f.gamma_rel_max) cfg.gamma_rel_max = f.gamma_rel_max;
  if (f.gamma_rel_points) cfg.gamma_rel_points = f.gamma_rel_points;
  if (f.gamma_rel_log) cfg.gamma_rel_log = *f.gamma_rel_log == "true";
  if (f.cutoff) cfg.cutoff = *f.cutoff;
  if (f.out) cfg.output_dir = *f.out;
  if (f.format) cfg.format = *f.format == "json" ? Format::kJson : Format::kCsv;
  cfg.validate();
  return cfg;
}

void add_common_flags(CLI::App& app, Flags& f) {
  app.add_option("--gamma", f.gamma, "OPO cavity decay rate");
  app.add_option("--epsilon", f.epsilon, "pump amplitude (repeatable, must stay below gamma)")->delimiter(',');
  app.add_option("--big-gamma", f.big_gamma, "filter cavity decay rate");
  app.add_option("--gamma-rel-min", f.gamma_rel_min, "sweep start");
  app.add_option("--gamma-rel-max", f.gamma_rel_max, "sweep end");
  app.add_option("--gamma-rel-points", f.gamma_rel_points, "sweep points");
  app.add_option("--gamma-rel-log", f.gamma_rel_log, "log spacing (true or false)")
      ->check(CLI::IsMember({"true", "false"}));
  app.add_option("--cutoff", f.cutoff, "Fock cutoff per mode");
  app.add_option("--out", f.out, "output directory (fallback: CATFILTER_OUT, then .)");
  app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", f.config, "key = value file; flags take precedence");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Photon subtraction from CW squeezed light: spectra, mode matching and filtering.", "catfilter");
  app.require_subcommand(1);
  Flags flags;

  using Command = std::function<int(const RunConfig&)>;
  std::vector<std::pair<CLI::App*, Command>> commands;
  const auto add = [&](const char* name, const char* help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_flags(*sub, flags);
    commands.emplace_back(sub, std::move(cmd));
    return sub;
  };
  add("spectrum", "squeezing spectra per epsilon", [&](const RunConfig& c) { return cmd_spectrum(c, out); });
  add("correlation", "normalized time-domain correlation per epsilon",
      [&](const RunConfig& c) { return cmd_correlation(c, out); });
  add("equivloss", "equivalent loss versus gamma_rel", [&](const RunConfig& c) { return cmd_equivloss(c, out); });
  add("modefuncs", "bare and filtered mode functions", [&](const RunConfig& c) { return cmd_modefuncs(c, out); });
  add("modematch", "filtered mode-matching rate, closed form and numeric",
      [&](const RunConfig& c) { return cmd_modematch(c, out); });
  CLI::App* verify = add("verify", "run the invariant suite",
                         [&](const RunConfig& c) { return cmd_verify(c, out, flags.corrupt); });
  // Test hook: force the named check to fail.
  verify->add_option("--corrupt-tolerance", flags.corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const RunConfig cfg = resolve(flags);
    for (const auto& [sub, cmd] : commands) {
      if (sub->parsed()) return cmd(cfg);
    }
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace catfilter::cli

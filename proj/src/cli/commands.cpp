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

#include <cmath>
#include <cstdio>
#include <ostream>

#include "catfilter/cli.hpp"
#include "catfilter/filter.hpp"
#include "catfilter/opo.hpp"
#include "catfilter/wavepacket.hpp"

namespace catfilter::cli {
namespace {

// Traces are written every 32nd node of the default time grid for |t| <= 5/gamma.
constexpr std::size_t kTraceDecimation = 32;
constexpr double kTraceHalfSpan = 5.0;
constexpr int kSpectrumHalfPoints = 500;
constexpr double kSpectrumHalfSpan = 10.0;
constexpr double kModeMatchTolerance = 1e-6;

const SweepRange kEquivLossSweep{1e-2, 1e2, 41, true};
const SweepRange kModeMatchSweep{0.1, 20.0, 25, true};

std::string epsilon_label(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", e);
  return buf;
}

std::string per_epsilon_stem(const std::string& base, const RunConfig& cfg, double e) {
  return cfg.epsilon_list.size() == 1 ? base : base + "_eps" + epsilon_label(e);
}

std::vector<std::size_t> trace_nodes(const Grid& grid, double gamma) {
  std::vector<std::size_t> nodes;
  const std::size_t zero = grid.zero_index();
  for (std::size_t i = zero % kTraceDecimation; i < grid.count(); i += kTraceDecimation) {
    if (std::abs(grid.at(i)) <= kTraceHalfSpan / gamma + 1e-12) nodes.push_back(i);
  }
  return nodes;
}

void announce(std::ostream& log, const std::filesystem::path& file) { log << "wrote " << file.string() << '\n'; }

// N(conj(h^R) * r), from the piecewise formula when it is defined.
Signal filtered_first(double gamma, double big_gamma) {
  try {
    return closed_hr_r(gamma, big_gamma);
  } catch (const ClosedFormError&) {
    return normalize(convolve(time_reverse(filter_response({big_gamma, 1})), both_side_exp(gamma)));
  }
}

Signal filtered_second(double gamma, double big_gamma) {
  try {
    return closed_hr_rr(gamma, big_gamma);
  } catch (const ClosedFormError&) {
    const Signal r = both_side_exp(gamma);
    return normalize(convolve(convolve(time_reverse(filter_response({big_gamma, 1})), r), r));
  }
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  for (double e : cfg.epsilon_list) {
    const OpoParams p{cfg.gamma, e};
    Table t{per_epsilon_stem("spectrum", cfg, e),
            {"omega", "v_plus", "v_minus", "v_plus_db", "v_minus_db", "r_tilde", "phi"},
            {}};
    for (int i = -kSpectrumHalfPoints; i <= kSpectrumHalfPoints; ++i) {
      const double omega = cfg.gamma * kSpectrumHalfSpan * i / kSpectrumHalfPoints;
      const SqueezingSpectrumPoint s = spectrum(p, omega);
      t.rows.push_back({omega, s.v_plus, s.v_minus, 10.0 * std::log10(s.v_plus), 10.0 * std::log10(s.v_minus),
                        s.r_tilde, s.phi});
    }
    announce(log, write_table(t, cfg));
  }
  return 0;
}

int cmd_correlation(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const Grid grid = default_time_grid(cfg.gamma);
  const std::vector<std::size_t> nodes = trace_nodes(grid, cfg.gamma);
  for (double e : cfg.epsilon_list) {
    const Signal r = correlation_time(OpoParams{cfg.gamma, e}, grid);
    Table t{per_epsilon_stem("correlation", cfg, e), {"t", "r"}, {}};
    for (std::size_t i : nodes) t.rows.push_back({grid.at(i), r.samples()[i].real()});
    announce(log, write_table(t, cfg));
  }
  return 0;
}

int cmd_equivloss(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const std::vector<double> gamma_rel = cfg.gamma_rel_range(kEquivLossSweep).values();
  Table t{"equivloss", {"gamma_rel"}, {}};
  for (double g : gamma_rel) t.rows.push_back({g});
  for (double e : cfg.epsilon_list) {
    t.columns.push_back("loss_eps" + epsilon_label(e));
    const auto curve = equiv_loss_curve(OpoParams{cfg.gamma, e}, gamma_rel);
    for (std::size_t i = 0; i < curve.size(); ++i) t.rows[i].push_back(curve[i].loss.value.value_or(std::nan("")));
  }
  announce(log, write_table(t, cfg));
  return 0;
}

int cmd_modefuncs(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const double g = cfg.gamma;
  const double G = cfg.big_gamma;
  const Grid grid = default_time_grid(g);
  const std::vector<std::size_t> nodes = trace_nodes(grid, g);

  const Signal r = both_side_exp(g);
  const Signal n_r = normalize(r);
  const Signal n_rr = normalize(convolve(r, r));
  Table bare{"modefuncs_bare", {"t", "n_r", "n_rr"}, {}};
  for (std::size_t i : nodes) {
    const double t = grid.at(i);
    bare.rows.push_back({t, n_r.value(t).real(), n_rr.value(t).real()});
  }
  announce(log, write_table(bare, cfg));

  const Signal n_hr_r = filtered_first(g, G);
  const Signal n_hr_rr = filtered_second(g, G);
  const Signal n_hr = normalize(time_reverse(filter_response({G, 1})));
  Table filtered{"modefuncs_filtered", {"t", "n_hr_r", "n_hr_rr", "n_hr"}, {}};
  for (std::size_t i : nodes) {
    const double t = grid.at(i);
    filtered.rows.push_back({t, n_hr_r.value(t).real(), n_hr_rr.value(t).real(), n_hr.value(t).real()});
  }
  announce(log, write_table(filtered, cfg));

  Table overlap{"modefuncs_overlap",
                {"gamma", "big_gamma", "bare_overlap2", "filtered_overlap2", "filtered_formula"},
                {{g, G, std::norm(inner_product(n_r, n_rr)), std::norm(inner_product(n_hr_r, n_hr_rr)),
                  mode_match_filtered_closed(G / g)}}};
  announce(log, write_table(overlap, cfg));
  return 0;
}

int cmd_modematch(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  std::vector<double> gamma_rel = cfg.gamma_rel_range(kModeMatchSweep).values();
  if (gamma_rel.front() <= 0.0) throw UsageError("Gamma_rel must be positive");
  // Rows ascend in 1/Gamma_rel, the figure's horizontal axis.
  Table t{"modematch", {"inv_gamma_rel", "gamma_rel", "m_closed", "m_numeric", "discrepancy"}, {}};
  int status = 0;
  const OpoParams p{cfg.gamma, cfg.epsilon_list.front()};
  for (auto it = gamma_rel.rbegin(); it != gamma_rel.rend(); ++it) {
    const ModeMatchReport rep = mode_match_report(p, 1.0 / *it);
    t.rows.push_back({rep.gamma_rel_inv, *it, rep.m_closed, rep.m_numeric, rep.discrepancy});
    if (!(rep.discrepancy <= kModeMatchTolerance)) {
      log << "FAIL modematch at gamma_rel " << format_number(*it) << ": discrepancy " << format_number(rep.discrepancy)
          << '\n';
      status = 1;
    }
  }
  announce(log, write_table(t, cfg));
  return status;
}

}  // namespace catfilter::cli

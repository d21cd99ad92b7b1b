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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "catfilter/cli.hpp"
#include "catfilter/filter.hpp"
#include "catfilter/fock.hpp"
#include "catfilter/opo.hpp"
#include "catfilter/wavepacket.hpp"

namespace catfilter::cli {
namespace {

class Suite {
 public:
  explicit Suite(const std::vector<std::string>& corrupt) : corrupt_(corrupt) {}

  // `measure` returns a deviation; the check passes when it is <= tolerance.
  void add(std::string name, double tolerance, const std::function<double()>& measure) {
    if (std::find(corrupt_.begin(), corrupt_.end(), name) != corrupt_.end()) tolerance = -1.0;
    double value = 0.0;
    try {
      value = measure();
    } catch (const std::exception&) {
      value = std::nan("");
    }
    results_.push_back({std::move(name), value, tolerance, value <= tolerance});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const std::vector<std::string>& corrupt_;
  std::vector<CheckResult> results_;
};

double max_curve_spread(const std::vector<std::vector<EquivLossPoint>>& curves) {
  double spread = 0.0;
  for (std::size_t i = 0; i < curves.front().size(); ++i) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& c : curves) {
      const double l = c[i].loss.value.value_or(std::nan(""));
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    spread = std::max(spread, hi - lo);
  }
  return spread;
}

// Coefficient of determination of a least-squares line through (x, y).
double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double cov = sxy - sx * sy / n;
  return cov * cov / ((sxx - sx * sx / n) * (syy - sy * sy / n));
}

}  // namespace

std::vector<CheckResult> run_checks(const RunConfig& cfg, const std::vector<std::string>& corrupt) {
  cfg.validate();
  const double g = cfg.gamma;
  const Grid grid = default_time_grid(g);
  const Signal r = both_side_exp(g);
  Suite s(corrupt);

  // Bare subtraction path.
  s.add("bare_mode_match_closed", 1e-6, [&] { return std::abs(mode_match(normalize(r), r) - 0.9); });
  s.add("bare_mode_match_sampled", 1e-6, [&] {
    const Signal rs = r.render(grid);
    return std::abs(mode_match(rs, rs) - 0.9);
  });

  // Squeezing spectrum.
  s.add("squeezing_db_eps0.3", 0.05, [&] { return std::abs(squeezing_db({g, 0.3 * g}, 0.0) - 5.38); });
  s.add("squeezing_db_eps0.7", 0.05, [&] { return std::abs(squeezing_db({g, 0.7 * g}, 0.0) - 15.07); });
  s.add("spectrum_uncertainty_product", 1e-12, [&] {
    double worst = 0.0;
    for (double e : {0.03, 0.3, 0.7}) {
      for (int i = 0; i < 1000; ++i) {
        const auto pt = spectrum({g, e * g}, g * (-10.0 + 20.0 * i / 999.0));
        worst = std::max(worst, std::abs(pt.v_plus * pt.v_minus - 1.0));
      }
    }
    return worst;
  });

  // Correlation traces.
  s.add("correlation_weak_limit", 1e-6, [&] {
    const Signal weak = correlation_time({g, 1e-4 * g}, grid);
    const Signal ref = normalize(r).render(grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.count(); ++i) worst = std::max(worst, std::abs(weak.samples()[i] - ref.samples()[i]));
    return worst;
  });
  s.add("correlation_eps0.7_overlap_deficit", 0.03, [&] {
    return 1.0 - std::abs(inner_product(correlation_time({g, 0.7 * g}, grid), normalize(r).render(grid)));
  });
  s.add("correlation_evenness", 1e-12, [&] {
    const Signal c = correlation_time({g, 0.7 * g}, grid);
    double worst = 0.0;
    for (std::size_t i = 1; i < grid.count(); ++i) {
      worst = std::max(worst, std::abs(c.samples()[i] - c.samples()[grid.count() - i]));
    }
    return worst;
  });

  // Equivalent loss.
  const std::vector<double> sweep = SweepRange{1e-2, 1e2, 41, true}.values();
  for (double e : {0.03, 0.3}) {
    char name[48];
    std::snprintf(name, sizeof name, "equiv_loss_unit_eps%g", e);
    s.add(name, 0.005, [&, e] {
      return std::abs(*equivalent_loss(wavepacket_variances(lorentz_wavepacket(1.0, g), {g, e * g})).value - 0.1);
    });
  }
  s.add("equiv_loss_curve_spread", 0.01, [&] {
    std::vector<std::vector<EquivLossPoint>> curves;
    for (double e : {0.03, 0.3, 0.7}) curves.push_back(equiv_loss_curve({g, e * g}, sweep));
    return max_curve_spread(curves);
  });
  s.add("equiv_loss_weak_pump", 1e-3, [&] {
    return std::abs(*equivalent_loss(wavepacket_variances(lorentz_wavepacket(1.0, g), {g, 0.01 * g})).value - 0.1);
  });
  s.add("cauchy_schwarz_bound", 1e-10, [&] {
    double worst = 0.0;
    const std::vector<double> rel = SweepRange{1e-2, 1e2, 20, true}.values();
    for (double e : {0.03, 0.3, 0.7}) {
      for (double x : rel) {
        const auto v = wavepacket_variances(lorentz_wavepacket(x, g), {g, e * g});
        worst = std::max(worst, 1.0 - v.v_plus_g * v.v_minus_g);
      }
    }
    return worst;
  });

  // Signal algebra.
  s.add("parseval", 1e-8, [&] {
    const Signal rs = normalize(r).render(grid);
    return std::abs(norm(fourier(rs)) - norm(rs));
  });

  // Filtering.
  s.add("filtered_limit_narrow", 1e-3, [] { return std::abs(mode_match_filtered_closed(1e-4) - 1.0); });
  s.add("filtered_limit_wide", 1e-3, [] { return std::abs(mode_match_filtered_closed(1e4) - 0.9); });
  s.add("filtered_monotone_violations", 0.0, [] {
    const std::vector<double> x = SweepRange{1e-4, 1e4, 50, true}.values();
    int violations = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
      if (!(mode_match_filtered_closed(x[i]) < mode_match_filtered_closed(x[i - 1]))) ++violations;
    }
    return double(violations);
  });
  s.add("filtered_dual_route", 1e-6, [&] {
    double worst = 0.0;
    for (double x : {0.05, 0.2, 0.4, 1.0, 3.0, 20.0}) {
      worst = std::max(worst, mode_match_report({g, 0.0}, 1.0 / x).discrepancy);
    }
    return worst;
  });
  s.add("filtered_closed_overlap", 1e-5, [&] {
    return std::abs(std::norm(inner_product(closed_hr_r(g, 0.4 * g), closed_hr_rr(g, 0.4 * g))) - 0.976908);
  });
  s.add("filtered_branch_continuity", 1e-9, [&] {
    return std::max(std::abs(closed_hr_r(g, 0.4 * g).exp_poly().jump_at_zero()),
                    std::abs(closed_hr_rr(g, 0.4 * g).exp_poly().jump_at_zero()));
  });
  s.add("heralded_weak_pump_closed", 1e-12, [&] {
    const Signal h = heralded_mode({g, 0.03 * g}, FilterParams{0.4 * g, 1}, true);
    return 1.0 - std::norm(inner_product(h, closed_hr_r(g, 0.4 * g)));
  });

  // Fock identities.
  const int cutoff = cfg.cutoff;
  s.add("fock_vacuum_overlap", 1e-10, [&] {
    const FockState sq = apply_squeeze(FockState::vacuum(1, cutoff), 0, 0.5);
    return std::abs(sq.amplitude({0}).real() - 1.0 / std::sqrt(std::cosh(0.5)));
  });
  s.add("fock_squeezed_single_photon", 1e-8, [&] { return 1.0 - squeezed_single_photon_check(0.5, cutoff).value(); });
  s.add("fock_loss_commutation", 1e-9, [&] {
    return loss_commutation_check(apply_squeeze(FockState::vacuum(1, cutoff), 0, 0.3), 0.2).value();
  });
  s.add("fock_pair_ratio", 1e-10, [] {
    const auto [p30, p21] = pair_apply_ratio_check(1.0, 1.0);
    return std::abs(p30 / p21 - 0.75);
  });
  s.add("fock_pair_ratio_ladder_head", 1e-10, [] {
    const auto [p30, p21] = pair_apply_ratio_check(3.0, 1.0);
    return std::abs(p30 / p21 - 27.0 / 4.0);
  });
  s.add("fock_tap_linearity", 1e-3, [&] {
    const FockState psi = apply_squeeze(FockState::vacuum(1, cutoff), 0, 0.5);
    std::vector<double> taps{1e-2, 1e-3, 1e-4};
    std::vector<double> dist;
    for (double t : taps) dist.push_back(compare_tap_to_annihilation(psi, t).value().distance);
    return 1.0 - linear_fit_r2(taps, dist);
  });

  return s.take();
}

int cmd_verify(const RunConfig& cfg, std::ostream& log, const std::vector<std::string>& corrupt) {
  const std::vector<CheckResult> results = run_checks(cfg, corrupt);
  int failed = 0;
  for (const auto& c : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-36s value=%-20s tol=%-20s %s\n", c.name.c_str(), format_number(c.value).c_str(),
                  format_number(c.tolerance).c_str(), c.pass ? "PASS" : "FAIL");
    log << line;
    failed += c.pass ? 0 : 1;
  }
  log << (failed ? std::to_string(failed) + " check(s) failed\n" : "all checks passed\n");
  return failed ? 1 : 0;
}

}  // namespace catfilter::cli

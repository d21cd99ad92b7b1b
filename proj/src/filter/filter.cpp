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

#include "catfilter/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catfilter/errors.hpp"
#include "catfilter/wavepacket.hpp"

namespace catfilter {
namespace {

constexpr double kDegenerateRateGuard = 1e-6;
constexpr double kNumericNodesPerDecay = 128.0;

void require_distinct_rates(double gamma, double big_gamma) {
  if (!(gamma > 0.0) || !(big_gamma > 0.0)) throw std::invalid_argument("rates must be positive");
  if (std::abs(gamma - big_gamma) / gamma <= kDegenerateRateGuard) {
    throw ClosedFormError("closed form needs gamma != Gamma; use the convolution route");
  }
}

// conj(h^R), the filter contribution to the heralded mode.
Signal reversed_response(const std::optional<FilterParams>& f) {
  if (!f) return delta_like();
  return time_reverse(filter_response(*f)).conj();
}

double sampled_filtered_match(double gamma, double big_gamma, const Grid& grid) {
  const Signal hr = time_reverse(filter_response({big_gamma, 1})).render(grid);
  const Signal r = both_side_exp(gamma).render(grid);
  return mode_match(convolve(hr, r), r);
}

}  // namespace

void FilterParams::validate() const {
  if (!(big_gamma > 0.0) || !std::isfinite(big_gamma)) throw std::invalid_argument("filter decay must be positive");
  if (order < 1) throw std::invalid_argument("filter order must be at least 1");
}

Signal filter_response(const FilterParams& f) {
  f.validate();
  const Signal single(Domain::kTime, ExpPoly::causal_exp(f.big_gamma, f.big_gamma));
  Signal h = single;
  for (int i = 1; i < f.order; ++i) h = convolve(h, single);
  return h;
}

cplx filter_transfer(const FilterParams& f, double omega) {
  f.validate();
  return std::pow(f.big_gamma / cplx(f.big_gamma, -omega), f.order);
}

Signal heralded_mode(const OpoParams& p, const std::optional<FilterParams>& f, bool weak_pump) {
  p.validate();
  const double slow = f ? std::min(p.gamma, f->big_gamma) : p.gamma;
  const double fast = f ? std::max(p.gamma, f->big_gamma) : p.gamma;
  return heralded_mode(p, f, weak_pump, time_grid_for_rates(slow, fast));
}

Signal heralded_mode(const OpoParams& p, const std::optional<FilterParams>& f, bool weak_pump,
                     const Grid& time_grid) {
  p.validate();
  if (f) f->validate();
  if (weak_pump) {
    // The amplitude epsilon sqrt(2 pi) drops out under normalization.
    return normalize(convolve(reversed_response(f), both_side_exp(p.gamma)));
  }
  if (p.epsilon == 0.0) throw std::domain_error("no heralded photon without pump (epsilon = 0)");

  // sinh r~ = x / sqrt(1 - x^2) with x = 2 g e / (a^2 + w^2), a^2 = g^2 + e^2.
  // The 1/w^2 tail of x carries the cusp at t = 0; it is added back in closed
  // form, H(w) x(w) <-> (1/sqrt(2 pi)) conj(h^R) * (g e / a) sqrt(2 pi) exp(-a|t|),
  // and only the remainder H (sinh r~ - x) ~ 1/w^6 is transformed numerically.
  const double a = std::hypot(p.gamma, p.epsilon);
  const double lead = 2.0 * p.gamma * p.epsilon;
  const Grid freq_grid = time_grid.reciprocal();
  const Signal filter_spectrum = f ? Signal(Domain::kFrequency, reversed_response(f).exp_poly()) : Signal();
  std::vector<cplx> remainder(freq_grid.count());
  for (std::size_t k = 0; k < remainder.size(); ++k) {
    const double omega = freq_grid.at(k);
    const double x = lead / (a * a + omega * omega);
    const double root = std::sqrt(1.0 - x * x);
    const cplx weight = f ? filter_spectrum.value(omega) : cplx(1.0);
    remainder[k] = weight * (x * x * x / (root * (1.0 + root)));
  }
  const Signal smooth = inverse_fourier(Signal::sampled(Domain::kFrequency, freq_grid, std::move(remainder)));

  const Signal lorentz_tail(Domain::kTime,
                            ExpPoly::both_side_exp(a, p.gamma * p.epsilon / a * std::sqrt(2.0 * std::numbers::pi)));
  const Signal cusp = f ? convolve(reversed_response(f), lorentz_tail).scaled(1.0 / std::sqrt(2.0 * std::numbers::pi))
                        : lorentz_tail;
  const Signal cusp_samples = cusp.render(time_grid);
  std::vector<cplx> v(time_grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = smooth.samples()[i] + cusp_samples.samples()[i];
  return normalize(Signal::sampled(Domain::kTime, time_grid, std::move(v)));
}

Signal closed_hr_r(double gamma, double big_gamma) {
  require_distinct_rates(gamma, big_gamma);
  const double g = gamma;
  const double G = big_gamma;
  const double a = std::sqrt(g * G / (2.0 * g + G));
  return piecewise_exp_poly({
      {HalfLine::kNegative, G, {2.0 * g * a / (g - G)}},
      {HalfLine::kNegative, g, {-(g + G) * a / (g - G)}},
      {HalfLine::kPositive, -g, {a}},
  });
}

Signal closed_hr_rr(double gamma, double big_gamma) {
  require_distinct_rates(gamma, big_gamma);
  const double g = gamma;
  const double G = big_gamma;
  const double p = std::sqrt((16.0 * g * g * g + 29.0 * g * g * G + 20.0 * g * G * G + 5.0 * G * G * G) /
                             (2.0 * g * g * g * G));
  const double d = g - G;
  return piecewise_exp_poly({
      {HalfLine::kNegative, G, {4.0 * g * g / (d * d) / p}},
      {HalfLine::kNegative, g, {-(2.0 * g - G) * (g + G) * (g + G) / (g * d * d) / p, (g + G) * (g + G) / d / p}},
      {HalfLine::kPositive, -g, {(2.0 + G / g) / p, (g + G) / p}},
  });
}

double mode_match_filtered_closed(double gamma_rel) {
  if (!(gamma_rel > 0.0)) throw std::invalid_argument("gamma_rel must be positive");
  const double x = gamma_rel;
  const double num = 8.0 + 9.0 * x + 3.0 * x * x;
  return num * num / (2.0 * (2.0 + x) * (16.0 + x * (29.0 + x * (20.0 + 5.0 * x))));
}

double mode_match_filtered_numeric(double gamma, double big_gamma) {
  if (!(gamma > 0.0) || !(big_gamma > 0.0)) throw std::invalid_argument("rates must be positive");
  const Grid coarse = time_grid_for_rates(std::min(gamma, big_gamma), std::max(gamma, big_gamma),
                                          kNumericNodesPerDecay);
  const double m_coarse = sampled_filtered_match(gamma, big_gamma, coarse);
  const double m_fine = sampled_filtered_match(gamma, big_gamma, coarse.refined());
  return (4.0 * m_fine - m_coarse) / 3.0;
}

ModeMatchReport mode_match_report(const OpoParams& p, double inv_gamma_rel) {
  p.validate();
  if (!(inv_gamma_rel > 0.0)) throw std::invalid_argument("1/Gamma_rel must be positive");
  const double gamma_rel = 1.0 / inv_gamma_rel;
  ModeMatchReport report;
  report.gamma_rel_inv = inv_gamma_rel;
  report.m_closed = mode_match_filtered_closed(gamma_rel);
  report.m_numeric = mode_match_filtered_numeric(p.gamma, gamma_rel * p.gamma);
  report.discrepancy = std::abs(report.m_closed - report.m_numeric);
  return report;
}

std::vector<ModeMatchReport> filter_scan(const OpoParams& p, std::span<const double> inv_gamma_rel_list) {
  std::vector<ModeMatchReport> out;
  out.reserve(inv_gamma_rel_list.size());
  for (double x : inv_gamma_rel_list) out.push_back(mode_match_report(p, x));
  return out;
}

}  // namespace catfilter

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

#ifndef CATFILTER_FILTER_HPP
#define CATFILTER_FILTER_HPP

#include <optional>
#include <span>
#include <vector>

#include "catfilter/grid.hpp"
#include "catfilter/opo.hpp"
#include "catfilter/signal.hpp"

namespace catfilter {

/// Low-pass filter cavity in the photon-subtraction path. `big_gamma` is the
/// cavity decay rate (including the factor 2); `order` > 1 cascades identical
/// single-pole cavities.
struct FilterParams {
  double big_gamma = 1.0;
  int order = 1;

  void validate() const;
};

/// Impulse response h(t) = big_gamma exp(-big_gamma t) u(t), convolved with
/// itself `order` times. Unit area, causal, closed form.
Signal filter_response(const FilterParams& f);

/// Frequency-dependent transmission (big_gamma / (big_gamma - i omega))^order.
cplx filter_transfer(const FilterParams& f, double omega);

/// Wavepacket of the heralded single-photon component after subtraction
/// through filter `f` (no filter when empty).
///
/// weak_pump: N(conj(h^R) * r) in closed form with r ~ exp(-gamma |t|).
/// exact:     N(conj(h^R)~(omega) sinh r~(omega)) transformed to time on
///            `time_grid` (default: time_grid_for_rates over gamma and Gamma).
Signal heralded_mode(const OpoParams& p, const std::optional<FilterParams>& f, bool weak_pump);
Signal heralded_mode(const OpoParams& p, const std::optional<FilterParams>& f, bool weak_pump,
                     const Grid& time_grid);

/// N(h^R * r)(t) for h = Gamma exp(-Gamma t) u(t), r ~ exp(-gamma |t|):
///
///   t < 0:  sqrt(gG/(2g+G)) / (g-G) * [2g exp(G t) - (g+G) exp(g t)]
///   t > 0:  sqrt(gG/(2g+G)) exp(-g t)
///
/// Defined for gamma != Gamma; throws ClosedFormError when
/// |gamma - Gamma| / gamma <= 1e-6 (use the convolution route there).
Signal closed_hr_r(double gamma, double big_gamma);

/// N(h^R * r * r)(t), same conventions:
///
///   P N(t) = 4g^2/(g-G)^2 exp(G t)
///            - [(2g-G)(g+G)^2 / (g (g-G)^2) - (g+G)^2/(g-G) t] exp(g t),   t < 0
///   P N(t) = [2 + G/g + (g+G) t] exp(-g t),                              t > 0
///
/// with P = sqrt((16g^3 + 29g^2 G + 20 g G^2 + 5G^3) / (2 g^3 G)).
Signal closed_hr_rr(double gamma, double big_gamma);

/// Closed-form M[h^R * r, r] as a function of gamma_rel = Gamma / gamma:
///   (8 + 9x + 3x^2)^2 / (2 (2 + x) (16 + 29x + 20x^2 + 5x^3)).
double mode_match_filtered_closed(double gamma_rel);

struct ModeMatchReport {
  double gamma_rel_inv;
  double m_closed;
  double m_numeric;
  double discrepancy;
};

/// M[h^R * r, r] on sampled signals: h^R and r rendered on a grid adapted to
/// both rates, every convolution done spectrally, and the trapezoidal error
/// removed by one Richardson step between the grid and its refinement.
double mode_match_filtered_numeric(double gamma, double big_gamma);

/// One point of the filter scan at Gamma = gamma / inv_gamma_rel.
ModeMatchReport mode_match_report(const OpoParams& p, double inv_gamma_rel);
std::vector<ModeMatchReport> filter_scan(const OpoParams& p, std::span<const double> inv_gamma_rel_list);

}  // namespace catfilter

#endif  // CATFILTER_FILTER_HPP

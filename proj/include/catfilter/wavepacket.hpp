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

#ifndef CATFILTER_WAVEPACKET_HPP
#define CATFILTER_WAVEPACKET_HPP

#include <optional>
#include <span>
#include <vector>

#include "catfilter/opo.hpp"
#include "catfilter/signal.hpp"

namespace catfilter {

/// Quadrature variances of the squeezed beam seen through a wavepacket mode,
/// in units of the vacuum variance:
///
///   V_g(+/-) = integral |g~(omega)|^2 V(+/-)(omega) d omega.
struct WavepacketVariances {
  double v_plus_g;
  double v_minus_g;
  /// integral |g~|^2 d omega as evaluated by the same quadrature.
  double weight;
};

/// Requires a normalized (to 1e-6) real (imaginary part below 1e-9) mode.
/// Closed-form modes are integrated with the substitution omega = a tan(theta)
/// and a midpoint rule refined until successive halvings agree to 1e-13;
/// sampled modes use their discrete spectrum.
WavepacketVariances wavepacket_variances(const Signal& g, const OpoParams& p);

/// sqrt(gamma_rel gamma) exp(-gamma_rel gamma |t|)
Signal lorentz_wavepacket(double gamma_rel, double gamma);

/// Loss fraction that would turn a pure squeezed state into the observed
/// variance pair: L = (V+ V- - 1) / (V+ + V- - 2). Undefined for vacuum.
struct EquivalentLoss {
  std::optional<double> value;
  bool indefinite() const { return !value.has_value(); }
};

EquivalentLoss equivalent_loss(const WavepacketVariances& v);

struct EquivLossPoint {
  double gamma_rel;
  double epsilon_over_gamma;
  EquivalentLoss loss;
};

/// Equivalent loss of Lorentzian wavepackets across relative bandwidths.
std::vector<EquivLossPoint> equiv_loss_curve(const OpoParams& p, std::span<const double> gamma_rel_list);

/// Mode-matching rate of squeezing with correlation r on wavepacket g,
///   M[g, r] = |<N(g), N(conj(g) * r)>|^2,
/// with both normalizations applied internally.
double mode_match(const Signal& g, const Signal& r);

/// Orthonormal modes {g_k} with g_0 = g and coefficients of the pair-creation
/// operator restricted to the ladder,
///   P_r^dagger = sum_k c_kk a_k^dagger^2 + 2 c_k,k+1 a_k^dagger a_k+1^dagger + rest.
struct ModeLadder {
  std::vector<Signal> modes;
  std::vector<cplx> diag_coeffs;     ///< c_kk = <g_k, conj(g_k) * r>
  std::vector<cplx> offdiag_coeffs;  ///< c_k,k+1 = <g_k+1, conj(g_k) * r>, real >= 0
  int depth = 0;
  /// The residual dropped below tolerance before `depth` was reached.
  bool terminated_early = false;
  /// Coupling of the last mode to the part of conj(g_k) * r outside the ladder.
  double tail_coupling = 0.0;
};

inline constexpr int kDefaultLadderDepth = 8;

/// Gram-Schmidt ladder of conj(g_k) * r. Every new mode is orthogonalized
/// against all previous ones; the ladder stops early once the residual norm
/// falls below 1e-10 of ||conj(g_k) * r||.
ModeLadder pair_mode_ladder(const Signal& g, const Signal& r, int depth = kDefaultLadderDepth);

}  // namespace catfilter

#endif  // CATFILTER_WAVEPACKET_HPP

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

#ifndef CATFILTER_OPO_HPP
#define CATFILTER_OPO_HPP

#include "catfilter/grid.hpp"
#include "catfilter/signal.hpp"

namespace catfilter {

/// Ideal, lossless optical parametric oscillator below threshold.
///
/// `gamma` is the cavity decay constant (including the factor 2) and
/// `epsilon` the pump amplitude in the frame where it is real and
/// nonnegative. Requires 0 <= epsilon < gamma.
struct OpoParams {
  double gamma = 1.0;
  double epsilon = 0.0;

  /// Throws std::invalid_argument outside 0 <= epsilon < gamma, gamma > 0.
  void validate() const;
};

struct SqueezingSpectrumPoint {
  double omega;
  double v_plus;   ///< antisqueezing, >= 1
  double v_minus;  ///< squeezing, in (0, 1]
  double r_tilde;  ///< 0.5 * ln(v_plus)
  double phi;      ///< cavity phase rotation, odd in omega
};

/// Sideband (anti)squeezing spectra, squeezing parameter and phase rotation
///
///   V+(w) = ((g+e)^2 + w^2) / ((g-e)^2 + w^2),   V- = 1/V+,
///   phi(w) = arg((g+e+iw) / (g-e-iw)).
SqueezingSpectrumPoint spectrum(const OpoParams& p, double omega);

/// 10 log10 V+(omega).
double squeezing_db(const OpoParams& p, double omega);

/// r~(omega) = 0.5 ln V+(omega), evaluated as atanh(2 g e / (g^2 + e^2 + w^2)).
double squeezing_parameter(const OpoParams& p, double omega);

/// r~ sampled on a frequency grid (the phase rotation phi is dropped).
Signal correlation_spectrum(const OpoParams& p, const Grid& freq_grid);

/// N(r)(t): normalized inverse transform of r~, sampled on `time_grid`
/// (centered). The imaginary residue of the transform must stay below 1e-9
/// and is discarded. For epsilon = 0 the weak-pump limit N(exp(-g|t|)) is
/// returned in closed form.
Signal correlation_time(const OpoParams& p, const Grid& time_grid);
Signal correlation_time(const OpoParams& p);

/// Weak-pump correlation r(t) ~ epsilon sqrt(2 pi) exp(-gamma |t|), closed
/// form. Identically zero at epsilon = 0.
Signal correlation_weak_pump(const OpoParams& p);

/// r = lambda_sig * lambda_idl^R, unnormalized.
Signal correlation_from_decays(const Signal& lambda_sig, const Signal& lambda_idl);

}  // namespace catfilter

#endif  // CATFILTER_OPO_HPP

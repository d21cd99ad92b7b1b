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

#include "catfilter/opo.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "catfilter/errors.hpp"

namespace catfilter {
namespace {

constexpr double kImagResidueTolerance = 1e-9;

}  // namespace

void OpoParams::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
  if (!(epsilon < gamma)) throw std::invalid_argument("epsilon must stay below threshold (epsilon < gamma)");
}

SqueezingSpectrumPoint spectrum(const OpoParams& p, double omega) {
  p.validate();
  const double plus = (p.gamma + p.epsilon) * (p.gamma + p.epsilon) + omega * omega;
  const double minus = (p.gamma - p.epsilon) * (p.gamma - p.epsilon) + omega * omega;
  SqueezingSpectrumPoint s;
  s.omega = omega;
  s.v_plus = plus / minus;
  s.v_minus = minus / plus;
  s.r_tilde = squeezing_parameter(p, omega);
  s.phi = std::arg(std::complex<double>(p.gamma + p.epsilon, omega) /
                   std::complex<double>(p.gamma - p.epsilon, -omega));
  return s;
}

double squeezing_db(const OpoParams& p, double omega) { return 10.0 * std::log10(spectrum(p, omega).v_plus); }

double squeezing_parameter(const OpoParams& p, double omega) {
  p.validate();
  return std::atanh(2.0 * p.gamma * p.epsilon /
                    (p.gamma * p.gamma + p.epsilon * p.epsilon + omega * omega));
}

Signal correlation_spectrum(const OpoParams& p, const Grid& freq_grid) {
  p.validate();
  std::vector<cplx> v(freq_grid.count());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = squeezing_parameter(p, freq_grid.at(k));
  return Signal::sampled(Domain::kFrequency, freq_grid, std::move(v));
}

Signal correlation_time(const OpoParams& p, const Grid& time_grid) {
  p.validate();
  if (p.epsilon == 0.0) return normalize(both_side_exp(p.gamma).render(time_grid));

  // r~ = atanh(x) with x = 2 g e / (a^2 + w^2), a^2 = g^2 + e^2. The cusp of
  // r(t) at t = 0 lives in the 1/w^2 tail of x, which a finite spectral
  // window truncates. Transform only atanh(x) - x ~ 1/w^6 numerically and add
  // x back through its exact time partner (g e / a) sqrt(2 pi) exp(-a|t|).
  const double a = std::hypot(p.gamma, p.epsilon);
  const double lead = 2.0 * p.gamma * p.epsilon;
  const Grid freq_grid = time_grid.reciprocal();
  std::vector<cplx> tail(freq_grid.count());
  for (std::size_t k = 0; k < tail.size(); ++k) {
    const double w = freq_grid.at(k);
    const double x = lead / (a * a + w * w);
    tail[k] = std::atanh(x) - x;
  }
  const Signal smooth = inverse_fourier(Signal::sampled(Domain::kFrequency, freq_grid, std::move(tail)));
  if (smooth.max_imag_part() > kImagResidueTolerance) {
    throw GridError("correlation has an imaginary residue above 1e-9; grid too coarse");
  }
  const Signal cusp = Signal(Domain::kTime, ExpPoly::both_side_exp(
                                                a, p.gamma * p.epsilon / a * std::sqrt(2.0 * std::numbers::pi)))
                          .render(time_grid);
  std::vector<cplx> v(time_grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = smooth.samples()[i].real() + cusp.samples()[i].real();
  // inverse_fourier returns the dual of the dual grid; pin it to the caller's.
  return normalize(Signal::sampled(Domain::kTime, time_grid, std::move(v)));
}

Signal correlation_time(const OpoParams& p) { return correlation_time(p, default_time_grid(p.gamma)); }

Signal correlation_weak_pump(const OpoParams& p) {
  p.validate();
  return Signal(Domain::kTime,
                ExpPoly::both_side_exp(p.gamma, p.epsilon * std::sqrt(2.0 * std::numbers::pi)));
}

Signal correlation_from_decays(const Signal& lambda_sig, const Signal& lambda_idl) {
  return convolve(lambda_sig, time_reverse(lambda_idl));
}

}  // namespace catfilter

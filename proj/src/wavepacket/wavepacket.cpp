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

#include "catfilter/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catfilter/errors.hpp"

namespace catfilter {
namespace {

constexpr double kNormTolerance = 1e-6;
constexpr double kRealTolerance = 1e-9;
constexpr double kQuadratureTolerance = 1e-13;
constexpr double kIndefiniteThreshold = 1e-14;
constexpr double kLadderResidualTolerance = 1e-10;
constexpr std::size_t kMaxQuadratureNodes = std::size_t{1} << 22;

struct VarianceSums {
  double plus = 0.0;
  double minus = 0.0;
  double weight = 0.0;
};

// Midpoint rule in theta for omega = a tan(theta) on (-pi/2, pi/2).
VarianceSums mapped_sums(const ExpPoly& g, const OpoParams& p, double a, std::size_t n) {
  const double h = std::numbers::pi / static_cast<double>(n);
  VarianceSums s;
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = -0.5 * std::numbers::pi + (static_cast<double>(j) + 0.5) * h;
    const double c = std::cos(theta);
    const double omega = a * std::tan(theta);
    const double density = std::norm(g.spectrum(omega)) * a / (c * c);
    const SqueezingSpectrumPoint sp = spectrum(p, omega);
    s.plus += density * sp.v_plus;
    s.minus += density * sp.v_minus;
    s.weight += density;
  }
  s.plus *= h;
  s.minus *= h;
  s.weight *= h;
  return s;
}

WavepacketVariances closed_form_variances(const ExpPoly& g, const OpoParams& p) {
  const double a = std::sqrt(g.slowest_rate() * g.fastest_rate());
  if (!(a > 0.0)) throw std::invalid_argument("wavepacket has no decay scale");
  std::size_t n = 64;
  VarianceSums prev = mapped_sums(g, p, a, n);
  while (true) {
    n *= 2;
    const VarianceSums next = mapped_sums(g, p, a, n);
    const double change = std::max({std::abs(next.plus - prev.plus), std::abs(next.minus - prev.minus),
                                    std::abs(next.weight - prev.weight)});
    prev = next;
    if (change < kQuadratureTolerance) break;
    if (n >= kMaxQuadratureNodes) throw GridError("wavepacket variance quadrature did not converge");
  }
  return {prev.plus, prev.minus, prev.weight};
}

WavepacketVariances sampled_variances(const Signal& g, const OpoParams& p) {
  const Signal spec = g.domain() == Domain::kFrequency ? g : fourier(g);
  const auto v = spec.samples();
  const Grid& grid = spec.grid();
  VarianceSums s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double w = std::norm(v[k]);
    const SqueezingSpectrumPoint sp = spectrum(p, grid.at(k));
    s.plus += w * sp.v_plus;
    s.minus += w * sp.v_minus;
    s.weight += w;
  }
  return {s.plus * grid.step(), s.minus * grid.step(), s.weight * grid.step()};
}

// g(t) real. Closed forms store the time function; a sampled spectrum of a
// real function is Hermitian, g~(-omega) = conj(g~(omega)).
bool is_real_mode(const Signal& g) {
  if (g.is_exp_poly() || g.domain() == Domain::kTime) return g.max_imag_part() <= kRealTolerance;
  const auto v = g.samples();
  const std::size_t n = v.size();
  double peak = 0.0;
  double asym = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    peak = std::max(peak, std::abs(v[k]));
    asym = std::max(asym, std::abs(v[(n - k) % n] - std::conj(v[k])));
  }
  return asym <= kRealTolerance * std::max(peak, 1.0);
}

}  // namespace

WavepacketVariances wavepacket_variances(const Signal& g, const OpoParams& p) {
  p.validate();
  if (g.is_delta()) throw ClosedFormError("DeltaLike is not a wavepacket");
  const double n = norm(g);
  if (std::abs(n - 1.0) > kNormTolerance) throw std::invalid_argument("wavepacket must be normalized");
  if (!is_real_mode(g)) throw std::invalid_argument("wavepacket mode function must be real");
  if (g.is_exp_poly()) return closed_form_variances(g.exp_poly(), p);
  return sampled_variances(g, p);
}

Signal lorentz_wavepacket(double gamma_rel, double gamma) {
  if (!(gamma_rel > 0.0) || !(gamma > 0.0)) throw std::invalid_argument("bandwidths must be positive");
  const double a = gamma_rel * gamma;
  return Signal(Domain::kTime, ExpPoly::both_side_exp(a, std::sqrt(a)));
}

EquivalentLoss equivalent_loss(const WavepacketVariances& v) {
  const double denominator = v.v_plus_g + v.v_minus_g - 2.0;
  if (std::abs(denominator) <= kIndefiniteThreshold) return {};
  return {(v.v_plus_g * v.v_minus_g - 1.0) / denominator};
}

std::vector<EquivLossPoint> equiv_loss_curve(const OpoParams& p, std::span<const double> gamma_rel_list) {
  p.validate();
  std::vector<EquivLossPoint> out;
  out.reserve(gamma_rel_list.size());
  for (double gamma_rel : gamma_rel_list) {
    const WavepacketVariances v = wavepacket_variances(lorentz_wavepacket(gamma_rel, p.gamma), p);
    out.push_back({gamma_rel, p.epsilon / p.gamma, equivalent_loss(v)});
  }
  return out;
}

double mode_match(const Signal& g, const Signal& r) {
  if (g.domain() != Domain::kTime || r.domain() != Domain::kTime) {
    throw std::invalid_argument("mode_match expects time-domain signals");
  }
  const Signal unit_g = normalize(g);
  const Signal paired = r.is_delta() ? unit_g.conj() : normalize(convolve(unit_g.conj(), r));
  return std::clamp(std::norm(inner_product(unit_g, paired)), 0.0, 1.0);
}

ModeLadder pair_mode_ladder(const Signal& g, const Signal& r, int depth) {
  if (depth < 1) throw std::invalid_argument("ladder depth must be at least 1");
  if (std::abs(norm(g) - 1.0) > kNormTolerance) throw std::invalid_argument("g must be normalized");
  ModeLadder ladder;
  ladder.depth = depth;
  ladder.modes.push_back(g);
  for (int k = 0; k < depth; ++k) {
    const Signal& current = ladder.modes.back();
    const Signal image = convolve(current.conj(), r);
    const double image_norm = norm(image);
    ladder.diag_coeffs.push_back(inner_product(current, image));
    // Two passes of classical Gram-Schmidt against every mode so far.
    Signal residual = image;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Signal& mode : ladder.modes) {
        residual = combine(1.0, residual, -inner_product(mode, residual), mode);
      }
    }
    const double residual_norm = norm(residual);
    ladder.tail_coupling = residual_norm;
    if (residual_norm < kLadderResidualTolerance * std::max(image_norm, 1e-300)) {
      ladder.offdiag_coeffs.push_back(0.0);
      ladder.terminated_early = true;
      break;
    }
    ladder.modes.push_back(residual.scaled(1.0 / residual_norm));
    ladder.offdiag_coeffs.push_back(inner_product(ladder.modes.back(), image));
  }
  return ladder;
}

}  // namespace catfilter

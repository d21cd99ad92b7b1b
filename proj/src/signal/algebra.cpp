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
#include <numbers>
#include <stdexcept>
#include <string>

#include "catfilter/errors.hpp"
#include "catfilter/signal.hpp"
#include "fft.hpp"

namespace catfilter {
namespace {

constexpr double kConvolutionEdgeTolerance = 1e-9;
constexpr double kParallelTolerance = 1e-7;

void require_same_domain(const Signal& f, const Signal& g) {
  if (f.domain() != g.domain()) throw std::invalid_argument("signals live in different domains");
}

// Brings two operands onto a shared grid; at least one must be sampled.
std::pair<Signal, Signal> on_common_grid(const Signal& f, const Signal& g) {
  if (f.is_sampled() && g.is_sampled()) {
    if (!f.grid().matches(g.grid())) throw GridError("sampled signals live on different grids");
    return {f, g};
  }
  const Grid& grid = f.is_sampled() ? f.grid() : g.grid();
  return {f.render(grid), g.render(grid)};
}

}  // namespace

cplx inner_product(const Signal& f, const Signal& g) {
  require_same_domain(f, g);
  if (f.is_delta() || g.is_delta()) throw ClosedFormError("DeltaLike is not square integrable");
  // Closed forms: Parseval makes both domains the time-domain integral.
  if (f.is_exp_poly() && g.is_exp_poly()) return inner_product(f.exp_poly(), g.exp_poly());
  const auto [a, b] = on_common_grid(f, g);
  const auto fa = a.samples();
  const auto gb = b.samples();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i) acc += std::conj(fa[i]) * gb[i];
  return acc * a.grid().step();
}

double norm(const Signal& f) {
  const double sq = inner_product(f, f).real();
  return std::sqrt(std::max(sq, 0.0));
}

Signal normalize(const Signal& f) {
  const double n = norm(f);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::domain_error("cannot normalize a zero-norm signal");
  return f.scaled(1.0 / n);
}

Signal combine(cplx a, const Signal& f, cplx b, const Signal& g) {
  require_same_domain(f, g);
  if (f.is_delta() || g.is_delta()) throw ClosedFormError("DeltaLike cannot be combined");
  if (f.is_exp_poly() && g.is_exp_poly()) {
    return Signal(f.domain(), f.exp_poly().scaled(a) + g.exp_poly().scaled(b));
  }
  const auto [fs, gs] = on_common_grid(f, g);
  std::vector<cplx> v(fs.samples().begin(), fs.samples().end());
  const auto w = gs.samples();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * v[i] + b * w[i];
  return Signal::sampled(f.domain(), fs.grid(), std::move(v));
}

Signal convolve(const Signal& f, const Signal& g) {
  if (f.domain() != Domain::kTime || g.domain() != Domain::kTime) {
    throw std::invalid_argument("convolution is defined on time-domain signals");
  }
  if (f.is_delta()) return g;
  if (g.is_delta()) return f;
  if (f.is_exp_poly() && g.is_exp_poly()) return Signal(Domain::kTime, convolve(f.exp_poly(), g.exp_poly()));

  const auto [fs, gs] = on_common_grid(f, g);
  const Grid& grid = fs.grid();
  std::vector<cplx> fw = detail::forward_transform(grid, fs.samples());
  const std::vector<cplx> gw = detail::forward_transform(grid, gs.samples());
  const double factor = std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < fw.size(); ++k) fw[k] *= factor * gw[k];
  std::vector<cplx> out = detail::inverse_transform(grid.reciprocal(), fw);
  const double edge = detail::edge_fraction(out);
  if (edge > kConvolutionEdgeTolerance) {
    throw GridError("convolution wraps around the grid (edge/peak = " + std::to_string(edge) +
                    "); need a half-span beyond " + std::to_string(-grid.start()));
  }
  return Signal::sampled(Domain::kTime, grid, std::move(out));
}

Signal time_reverse(const Signal& f) {
  if (f.domain() != Domain::kTime) throw std::invalid_argument("time reversal needs a time-domain signal");
  if (f.is_delta()) return f;
  if (f.is_exp_poly()) return Signal(Domain::kTime, f.exp_poly().reversed());
  const Grid& grid = f.grid();
  if (!grid.is_centered()) throw GridError("time reversal needs a centered grid");
  const auto v = f.samples();
  const std::size_t n = v.size();
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[(n - i) % n];
  return Signal::sampled(Domain::kTime, grid, std::move(out));
}

GramSchmidtResult gram_schmidt_step(const Signal& g, const Signal& v) {
  const Signal unit_v = normalize(v);
  GramSchmidtResult result;
  result.parallel_coeff = inner_product(g, unit_v);
  const Signal residual = combine(1.0, unit_v, -result.parallel_coeff, g);
  result.orthogonal_coeff = norm(residual);
  if (result.orthogonal_coeff > kParallelTolerance) {
    result.orthogonal = residual.scaled(1.0 / result.orthogonal_coeff);
  }
  return result;
}

}  // namespace catfilter

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

#include "catfilter/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catfilter/errors.hpp"

namespace catfilter {

Signal::Signal(Domain domain, ExpPoly time_partner) : domain_(domain), form_(std::move(time_partner)) {}

Signal Signal::delta() { return Signal(Domain::kTime, std::variant<ExpPoly, Delta, Sampled>(Delta{})); }

Signal Signal::sampled(Domain domain, Grid grid, std::vector<cplx> values) {
  if (values.size() != grid.count()) throw std::invalid_argument("sample count does not match grid");
  return Signal(domain, std::variant<ExpPoly, Delta, Sampled>(Sampled{grid, std::move(values)}));
}

const ExpPoly& Signal::exp_poly() const {
  if (const auto* p = std::get_if<ExpPoly>(&form_)) return *p;
  throw std::logic_error("signal is not an exponential polynomial");
}

const Grid& Signal::grid() const {
  if (const auto* s = std::get_if<Sampled>(&form_)) return s->grid;
  throw std::logic_error("signal is not sampled");
}

std::span<const cplx> Signal::samples() const {
  if (const auto* s = std::get_if<Sampled>(&form_)) return s->values;
  throw std::logic_error("signal is not sampled");
}

cplx Signal::value(double x) const {
  if (is_delta()) throw ClosedFormError("DeltaLike has no point values");
  const ExpPoly& f = exp_poly();
  return domain_ == Domain::kTime ? f.value(x) : f.spectrum(x);
}

Signal Signal::render(const Grid& grid) const {
  if (const auto* s = std::get_if<Sampled>(&form_)) {
    if (!s->grid.matches(grid)) throw GridError("sampled signal cannot be re-gridded");
    return *this;
  }
  if (is_delta()) throw ClosedFormError("DeltaLike cannot be sampled");
  std::vector<cplx> values(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) values[i] = value(grid.at(i));
  return sampled(domain_, grid, std::move(values));
}

Signal Signal::scaled(cplx factor) const {
  if (is_delta()) {
    if (factor == cplx(1.0)) return *this;
    throw ClosedFormError("DeltaLike cannot be rescaled");
  }
  if (const auto* s = std::get_if<Sampled>(&form_)) {
    std::vector<cplx> v = s->values;
    for (auto& x : v) x *= factor;
    return sampled(domain_, s->grid, std::move(v));
  }
  return Signal(domain_, exp_poly().scaled(factor));
}

Signal Signal::conj() const {
  if (is_delta()) return *this;
  if (const auto* s = std::get_if<Sampled>(&form_)) {
    std::vector<cplx> v = s->values;
    for (auto& x : v) x = std::conj(x);
    return sampled(domain_, s->grid, std::move(v));
  }
  // conj(f~(omega)) is the transform of conj(f)(-t).
  if (domain_ == Domain::kFrequency) return Signal(domain_, exp_poly().conj().reversed());
  return Signal(domain_, exp_poly().conj());
}

double Signal::max_imag_part() const {
  if (is_delta()) return 0.0;
  if (const auto* s = std::get_if<Sampled>(&form_)) {
    double m = 0.0;
    for (const auto& x : s->values) m = std::max(m, std::abs(x.imag()));
    return m;
  }
  return exp_poly().max_imag_part();
}

Signal both_side_exp(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("decay rate must be positive");
  return Signal(Domain::kTime, ExpPoly::both_side_exp(rate));
}

Signal causal_exp(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("decay rate must be positive");
  return Signal(Domain::kTime, ExpPoly::causal_exp(rate));
}

Signal anti_causal_exp(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("decay rate must be positive");
  return Signal(Domain::kTime, ExpPoly::anti_causal_exp(rate));
}

Signal lorentzian(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("decay rate must be positive");
  return Signal(Domain::kFrequency, ExpPoly::both_side_exp(rate, std::sqrt(std::numbers::pi / 2.0)));
}

Signal delta_like() { return Signal::delta(); }

Signal piecewise_exp_poly(std::vector<ExpPiece> pieces) {
  return Signal(Domain::kTime, ExpPoly(std::move(pieces)));
}

}  // namespace catfilter

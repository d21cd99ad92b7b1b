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

#include "catfilter/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catfilter {

Grid::Grid(double start, double step, std::size_t count) : start_(start), step_(step), count_(count) {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be positive");
  if (count < 2) throw std::invalid_argument("grid needs at least two nodes");
  if (!std::isfinite(start)) throw std::invalid_argument("grid start must be finite");
}

Grid Grid::centered(double step, std::size_t count) {
  if (count % 2 != 0) throw std::invalid_argument("centered grid needs an even node count");
  return Grid(-static_cast<double>(count / 2) * step, step, count);
}

Grid Grid::centered_span(double half_span, std::size_t count) {
  return centered(2.0 * half_span / static_cast<double>(count), count);
}

bool Grid::is_centered() const {
  return count_ % 2 == 0 && start_ == -static_cast<double>(count_ / 2) * step_;
}

bool Grid::matches(const Grid& other) const {
  if (count_ != other.count_) return false;
  const double tol = 1e-12 * std::max(span(), other.span());
  return std::abs(start_ - other.start_) <= tol &&
         std::abs(step_ - other.step_) * static_cast<double>(count_) <= tol;
}

Grid Grid::refined() const {
  return Grid(start_, 0.5 * step_, 2 * count_);
}

Grid Grid::reciprocal() const {
  const double dual_step = 2.0 * std::numbers::pi / (static_cast<double>(count_) * step_);
  return centered(dual_step, count_);
}

Grid default_time_grid(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  return Grid::centered_span(40.0 / gamma, std::size_t{1} << 16);
}

Grid time_grid_for_rates(double slow_rate, double fast_rate, double nodes_per_decay) {
  if (!(slow_rate > 0.0) || !(fast_rate >= slow_rate)) {
    throw std::invalid_argument("need 0 < slow_rate <= fast_rate");
  }
  const double half_span = 40.0 / slow_rate;
  const double max_step = 1.0 / (nodes_per_decay * fast_rate);
  const auto needed = static_cast<std::size_t>(std::ceil(2.0 * half_span / max_step));
  return Grid::centered_span(half_span, std::bit_ceil(std::max<std::size_t>(needed, 2)));
}

}  // namespace catfilter

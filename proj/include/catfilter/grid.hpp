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

#ifndef CATFILTER_GRID_HPP
#define CATFILTER_GRID_HPP

#include <cstddef>

namespace catfilter {

/// Uniform sampling grid x_i = start + i * step, i in [0, count).
///
/// Transforms, time reversal and FFT convolution require a *centered* grid:
/// an even count with start = -(count / 2) * step, so that x = 0 is the node
/// count / 2 and the grid is symmetric under periodic wrap.
class Grid {
 public:
  Grid(double start, double step, std::size_t count);

  /// Centered grid with the given node spacing.
  static Grid centered(double step, std::size_t count);
  /// Centered grid covering [-half_span, half_span) with `count` nodes.
  static Grid centered_span(double half_span, std::size_t count);

  double start() const { return start_; }
  double step() const { return step_; }
  std::size_t count() const { return count_; }
  double span() const { return step_ * static_cast<double>(count_); }
  double at(std::size_t i) const { return start_ + static_cast<double>(i) * step_; }
  double last() const { return at(count_ - 1); }

  bool is_centered() const;
  /// Index of the x = 0 node of a centered grid.
  std::size_t zero_index() const { return count_ / 2; }

  /// Same start, half the step, twice the nodes; every node of *this is kept.
  Grid refined() const;
  /// The frequency grid paired with this grid by the discrete transform:
  /// step 2*pi/(count*step), centered, same count.
  Grid reciprocal() const;

  /// Same node count and nodes equal to a relative 1e-12 of the span. Grids
  /// produced by a transform round trip match their origin this way.
  bool matches(const Grid& other) const;

 private:
  double start_;
  double step_;
  std::size_t count_;
};

/// Default time grid for a correlation of decay rate `gamma`: [-40/gamma,
/// 40/gamma) with 2^16 nodes.
Grid default_time_grid(double gamma);

/// Centered power-of-two time grid that spans 40 e-folds of the slowest rate
/// and resolves the fastest rate with at least `nodes_per_decay` nodes per
/// 1/fast_rate.
Grid time_grid_for_rates(double slow_rate, double fast_rate,
                         double nodes_per_decay = 128.0);

}  // namespace catfilter

#endif  // CATFILTER_GRID_HPP

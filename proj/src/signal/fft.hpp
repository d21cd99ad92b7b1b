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

#ifndef CATFILTER_DETAIL_FFT_HPP
#define CATFILTER_DETAIL_FFT_HPP

#include <span>
#include <vector>

#include "catfilter/exp_poly.hpp"
#include "catfilter/grid.hpp"

namespace catfilter::detail {

/// Continuous-convention transform of samples on a centered time grid:
///   F_k = dt/sqrt(2 pi) * sum_n f_n exp(i w_k t_n),  w_k on grid.reciprocal().
std::vector<cplx> forward_transform(const Grid& time_grid, std::span<const cplx> samples);

/// Inverse of forward_transform:
///   f_n = dw/sqrt(2 pi) * sum_k F_k exp(-i w_k t_n),  t_n on freq_grid.reciprocal().
std::vector<cplx> inverse_transform(const Grid& freq_grid, std::span<const cplx> samples);

/// Largest magnitude among the outer count/64 nodes at either end, relative
/// to the peak magnitude (0 for an all-zero vector).
double edge_fraction(std::span<const cplx> samples);

}  // namespace catfilter::detail

#endif  // CATFILTER_DETAIL_FFT_HPP

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

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

#include "catfilter/errors.hpp"
#include "catfilter/signal.hpp"
#include "fft.hpp"

namespace catfilter {
namespace detail {
namespace {

// fftw planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftBuffer {
 public:
  explicit FftBuffer(std::size_t n)
      : n_(n), data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (data_ == nullptr) throw std::bad_alloc();
  }
  ~FftBuffer() { fftw_free(data_); }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;

  fftw_complex* data() { return data_; }
  cplx get(std::size_t i) const { return {data_[i][0], data_[i][1]}; }
  void set(std::size_t i, cplx v) {
    data_[i][0] = v.real();
    data_[i][1] = v.imag();
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  fftw_complex* data_;
};

// In-place DFT with exponent sign `sign` (+1 or -1), unnormalized.
void execute_dft(FftBuffer& buf, int sign) {
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(buf.size()), buf.data(), buf.data(),
                            sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// On centered grids w_k t_n = 2 pi k n / N - pi k - pi n + pi N / 2, so both
// directions reduce to a plain DFT with alternating signs.
std::vector<cplx> centered_dft(const Grid& grid, std::span<const cplx> samples, int sign, double scale) {
  if (!grid.is_centered()) throw GridError("transforms require a centered grid");
  const std::size_t n = grid.count();
  FftBuffer buf(n);
  for (std::size_t i = 0; i < n; ++i) buf.set(i, (i % 2 == 0) ? samples[i] : -samples[i]);
  execute_dft(buf, sign);
  const double global = ((n / 2) % 2 == 0) ? scale : -scale;
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = ((k % 2 == 0) ? global : -global) * buf.get(k);
  return out;
}

}  // namespace

std::vector<cplx> forward_transform(const Grid& time_grid, std::span<const cplx> samples) {
  return centered_dft(time_grid, samples, +1, time_grid.step() / std::sqrt(2.0 * std::numbers::pi));
}

std::vector<cplx> inverse_transform(const Grid& freq_grid, std::span<const cplx> samples) {
  return centered_dft(freq_grid, samples, -1, freq_grid.step() / std::sqrt(2.0 * std::numbers::pi));
}

double edge_fraction(std::span<const cplx> samples) {
  double peak = 0.0;
  for (const auto& v : samples) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  const std::size_t band = std::max<std::size_t>(1, samples.size() / 64);
  double edge = 0.0;
  for (std::size_t i = 0; i < band; ++i) {
    edge = std::max({edge, std::abs(samples[i]), std::abs(samples[samples.size() - 1 - i])});
  }
  return edge / peak;
}

}  // namespace detail

namespace {

Signal transform(const Signal& f, Domain from, double leakage_tolerance) {
  if (f.domain() != from) {
    throw std::invalid_argument(from == Domain::kTime ? "fourier expects a time-domain signal"
                                                      : "inverse_fourier expects a frequency-domain signal");
  }
  const Domain to = from == Domain::kTime ? Domain::kFrequency : Domain::kTime;
  if (f.is_delta()) throw ClosedFormError("DeltaLike is not square integrable");
  if (f.is_exp_poly()) return Signal(to, f.exp_poly());

  if (const double cut = detail::edge_fraction(f.samples()); cut > leakage_tolerance) {
    throw GridError("input reaches " + std::to_string(cut) + " of its peak at the grid edges; widen the grid");
  }
  const Grid out_grid = f.grid().reciprocal();
  std::vector<cplx> out = from == Domain::kTime ? detail::forward_transform(f.grid(), f.samples())
                                                : detail::inverse_transform(f.grid(), f.samples());
  const double leak = detail::edge_fraction(out);
  if (leak > leakage_tolerance) {
    throw GridError("transform leaks " + std::to_string(leak) +
                    " of its peak at the grid edges; refine the input grid");
  }
  return Signal::sampled(to, out_grid, std::move(out));
}

}  // namespace

Signal fourier(const Signal& f, double leakage_tolerance) {
  return transform(f, Domain::kTime, leakage_tolerance);
}

Signal inverse_fourier(const Signal& f, double leakage_tolerance) {
  return transform(f, Domain::kFrequency, leakage_tolerance);
}

}  // namespace catfilter

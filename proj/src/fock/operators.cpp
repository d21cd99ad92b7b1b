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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "catfilter/errors.hpp"
#include "catfilter/fock.hpp"

namespace catfilter {
namespace {

void require_mode(const FockState& s, int mode) {
  if (mode < 0 || mode >= s.mode_count()) throw std::out_of_range("mode index out of range");
}

std::size_t stride_of(const FockState& s, int mode) {
  std::size_t stride = 1;
  for (int m = mode + 1; m < s.mode_count(); ++m) stride *= static_cast<std::size_t>(s.cutoff() + 1);
  return stride;
}

void check_leakage(const FockState& out, double tolerance, int suggested_cutoff) {
  const double top = out.max_top_shell_probability();
  if (top > tolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "top-shell probability %.3e exceeds %.1e; try cutoff >= %d", top, tolerance,
                  suggested_cutoff);
    throw CutoffError(buf);
  }
}

// exp(theta (a_i a_j^dag - a_i^dag a_j)) restricted to n_i + n_j = total,
// basis ordered by n_i.
Eigen::MatrixXd mixing_block(int total, double theta) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(total + 1, total + 1);
  for (int k = 0; k <= total; ++k) {
    if (k > 0) g(k - 1, k) = theta * std::sqrt(double(k) * double(total - k + 1));
    if (k < total) g(k + 1, k) = -theta * std::sqrt(double(k + 1) * double(total - k));
  }
  return g.exp();
}

}  // namespace

FockState apply_creation(const FockState& s, int mode) {
  require_mode(s, mode);
  const std::size_t stride = stride_of(s, mode);
  std::vector<cplx> out(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const cplx a = s.amplitudes()[i];
    if (a == 0.0) continue;
    const int n = s.photons_at(i)[static_cast<std::size_t>(mode)];
    if (n == s.cutoff()) throw CutoffError("creation operator has no headroom below the cutoff");
    out[i + stride] = std::sqrt(double(n + 1)) * a;
  }
  return FockState::from_amplitudes(s.mode_count(), s.cutoff(), std::move(out));
}

FockState apply_annihilation(const FockState& s, int mode) {
  require_mode(s, mode);
  const std::size_t stride = stride_of(s, mode);
  std::vector<cplx> out(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const int n = s.photons_at(i)[static_cast<std::size_t>(mode)];
    if (n > 0) out[i - stride] = std::sqrt(double(n)) * s.amplitudes()[i];
  }
  return FockState::from_amplitudes(s.mode_count(), s.cutoff(), std::move(out));
}

FockState apply_beamsplitter(const FockState& s, std::pair<int, int> modes, double reflectivity,
                             double leakage_tolerance) {
  const auto [mi, mj] = modes;
  require_mode(s, mi);
  require_mode(s, mj);
  if (mi == mj) throw std::invalid_argument("beamsplitter needs two distinct modes");
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) throw std::invalid_argument("reflectivity must lie in [0, 1]");

  const int cutoff = s.cutoff();
  const double theta = std::atan2(std::sqrt(reflectivity), std::sqrt(1.0 - reflectivity));
  const std::size_t si = stride_of(s, mi);
  const std::size_t sj = stride_of(s, mj);

  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(2 * cutoff + 1));
  for (int total = 0; total <= 2 * cutoff; ++total) blocks.push_back(mixing_block(total, theta));

  std::vector<cplx> out(s.dimension());
  double lost = 0.0;
  for (std::size_t base = 0; base < s.dimension(); ++base) {
    const std::vector<int> n = s.photons_at(base);
    if (n[static_cast<std::size_t>(mi)] != 0 || n[static_cast<std::size_t>(mj)] != 0) continue;
    for (int total = 0; total <= 2 * cutoff; ++total) {
      const int lo = std::max(0, total - cutoff);
      const int hi = std::min(total, cutoff);
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(total + 1);
      bool any = false;
      for (int k = lo; k <= hi; ++k) {
        v(k) = s.amplitudes()[base + std::size_t(k) * si + std::size_t(total - k) * sj];
        any = any || v(k) != 0.0;
      }
      if (!any) continue;
      const Eigen::VectorXcd w = blocks[static_cast<std::size_t>(total)].cast<cplx>() * v;
      for (int k = 0; k <= total; ++k) {
        if (k < lo || k > hi) {
          lost += std::norm(w(k));
        } else {
          out[base + std::size_t(k) * si + std::size_t(total - k) * sj] = w(k);
        }
      }
    }
  }
  FockState result = FockState::from_amplitudes(s.mode_count(), cutoff, std::move(out));
  const double total_norm = s.norm_squared();
  if (total_norm > 0.0 && lost / total_norm > leakage_tolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "beamsplitter pushed probability %.3e past the cutoff; try cutoff >= %d",
                  lost / total_norm, 2 * cutoff);
    throw CutoffError(buf);
  }
  check_leakage(result, leakage_tolerance, cutoff + 10);
  return result;
}

FockState apply_squeeze(const FockState& s, int mode, double r, double leakage_tolerance) {
  require_mode(s, mode);
  if (!std::isfinite(r)) throw std::invalid_argument("squeezing parameter must be finite");
  const int cutoff = s.cutoff();
  const int dim = cutoff + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 2 < dim; ++n) {
    const double c = 0.5 * r * std::sqrt(double(n + 1) * double(n + 2));
    g(n + 2, n) = c;
    g(n, n + 2) = -c;
  }
  const Eigen::MatrixXcd u = g.exp().cast<cplx>();

  const std::size_t stride = stride_of(s, mode);
  std::vector<cplx> out(s.dimension());
  Eigen::VectorXcd v(dim);
  for (std::size_t base = 0; base < s.dimension(); ++base) {
    if (s.photons_at(base)[static_cast<std::size_t>(mode)] != 0) continue;
    for (int n = 0; n < dim; ++n) v(n) = s.amplitudes()[base + std::size_t(n) * stride];
    const Eigen::VectorXcd w = u * v;
    for (int n = 0; n < dim; ++n) out[base + std::size_t(n) * stride] = w(n);
  }
  FockState result = FockState::from_amplitudes(s.mode_count(), cutoff, std::move(out));

  int suggested = cutoff + 10;
  const double t = std::tanh(std::abs(r));
  if (t > 0.0 && t < 1.0) {
    suggested = std::max(suggested, static_cast<int>(std::ceil(std::log(leakage_tolerance) / std::log(t))) + 2);
  }
  check_leakage(result, leakage_tolerance, suggested);
  return result;
}

}  // namespace catfilter

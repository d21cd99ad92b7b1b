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

#include "catfilter/fock.hpp"

namespace catfilter {
namespace {

std::size_t checked_dimension(int modes, int cutoff) {
  if (modes < 1 || modes > kMaxFockModes) throw std::invalid_argument("mode count must be 1, 2 or 3");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
  std::size_t dim = 1;
  for (int m = 0; m < modes; ++m) dim *= static_cast<std::size_t>(cutoff + 1);
  return dim;
}

}  // namespace

FockState::FockState(int modes, int cutoff, std::vector<cplx> amplitudes)
    : modes_(modes), cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dimension(modes, cutoff)) {
    throw std::invalid_argument("amplitude count does not match (cutoff+1)^modes");
  }
}

FockState FockState::vacuum(int mode_count, int cutoff) {
  std::vector<cplx> a(checked_dimension(mode_count, cutoff));
  a[0] = 1.0;
  return FockState(mode_count, cutoff, std::move(a));
}

FockState FockState::number(std::vector<int> photons, int cutoff) {
  const int modes = static_cast<int>(photons.size());
  FockState s(modes, cutoff, std::vector<cplx>(checked_dimension(modes, cutoff)));
  s.amplitudes_[s.index_of(photons)] = 1.0;
  return s;
}

FockState FockState::from_amplitudes(int mode_count, int cutoff, std::vector<cplx> amplitudes) {
  return FockState(mode_count, cutoff, std::move(amplitudes));
}

std::size_t FockState::index_of(std::span<const int> photons) const {
  if (static_cast<int>(photons.size()) != modes_) throw std::invalid_argument("wrong number of occupations");
  std::size_t idx = 0;
  for (int n : photons) {
    if (n < 0 || n > cutoff_) throw std::out_of_range("occupation outside [0, cutoff]");
    idx = idx * static_cast<std::size_t>(cutoff_ + 1) + static_cast<std::size_t>(n);
  }
  return idx;
}

std::vector<int> FockState::photons_at(std::size_t index) const {
  std::vector<int> n(static_cast<std::size_t>(modes_));
  const auto base = static_cast<std::size_t>(cutoff_ + 1);
  for (int m = modes_ - 1; m >= 0; --m) {
    n[static_cast<std::size_t>(m)] = static_cast<int>(index % base);
    index /= base;
  }
  return n;
}

cplx FockState::amplitude(std::initializer_list<int> photons) const {
  return amplitude(std::span<const int>(photons.begin(), photons.size()));
}

double FockState::norm_squared() const {
  double s = 0.0;
  for (const cplx& a : amplitudes_) s += std::norm(a);
  return s;
}

FockState FockState::normalized() const {
  const double n2 = norm_squared();
  if (n2 == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return scaled(1.0 / std::sqrt(n2));
}

FockState FockState::scaled(cplx factor) const {
  std::vector<cplx> a = amplitudes_;
  for (cplx& x : a) x *= factor;
  return FockState(modes_, cutoff_, std::move(a));
}

double FockState::top_shell_probability(int mode) const {
  if (mode < 0 || mode >= modes_) throw std::out_of_range("mode index");
  const double total = norm_squared();
  if (total == 0.0) return 0.0;
  double top = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const int n = photons_at(i)[static_cast<std::size_t>(mode)];
    if (n >= cutoff_ - 1) top += std::norm(amplitudes_[i]);
  }
  return top / total;
}

double FockState::max_top_shell_probability() const {
  double worst = 0.0;
  for (int m = 0; m < modes_; ++m) worst = std::max(worst, top_shell_probability(m));
  return worst;
}

FockState FockState::with_vacuum_mode() const {
  if (modes_ >= kMaxFockModes) throw std::invalid_argument("no room for another mode");
  const auto base = static_cast<std::size_t>(cutoff_ + 1);
  std::vector<cplx> a(amplitudes_.size() * base);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) a[i * base] = amplitudes_[i];
  return FockState(modes_ + 1, cutoff_, std::move(a));
}

FockState FockState::project_last_mode(int n) const {
  if (modes_ < 2) throw std::invalid_argument("projection needs at least two modes");
  if (n < 0 || n > cutoff_) throw std::out_of_range("occupation outside [0, cutoff]");
  const auto base = static_cast<std::size_t>(cutoff_ + 1);
  std::vector<cplx> a(amplitudes_.size() / base);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = amplitudes_[i * base + static_cast<std::size_t>(n)];
  return FockState(modes_ - 1, cutoff_, std::move(a));
}

cplx inner_product(const FockState& a, const FockState& b) {
  if (a.mode_count() != b.mode_count() || a.cutoff() != b.cutoff()) {
    throw std::invalid_argument("states live in different truncated spaces");
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return s;
}

double fidelity(const FockState& a, const FockState& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na == 0.0 || nb == 0.0) throw std::domain_error("fidelity with the zero vector");
  return std::norm(inner_product(a, b)) / (na * nb);
}

double aligned_distance(const FockState& a, const FockState& b) {
  const FockState na = a.normalized();
  const FockState nb = b.normalized();
  const cplx ov = inner_product(nb, na);
  const cplx phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx(1.0);
  double d2 = 0.0;
  for (std::size_t i = 0; i < na.dimension(); ++i) {
    d2 += std::norm(na.amplitudes()[i] - phase * nb.amplitudes()[i]);
  }
  return std::sqrt(d2);
}

void write_csv(std::ostream& out, const FockState& s, double threshold) {
  for (int m = 0; m < s.mode_count(); ++m) out << 'n' << (m + 1) << ',';
  out << "re,im\n";
  char buf[64];
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const cplx a = s.amplitudes()[i];
    if (std::abs(a) <= threshold) continue;
    for (int n : s.photons_at(i)) out << n << ',';
    std::snprintf(buf, sizeof buf, "%.12e,%.12e\n", a.real(), a.imag());
    out << buf;
  }
}

}  // namespace catfilter

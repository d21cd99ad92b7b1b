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
#include <stdexcept>

#include "catfilter/fock.hpp"

namespace catfilter {

HeraldResult subtract_via_tap(const FockState& s, double reflectivity, int mode) {
  if (!(reflectivity > 0.0 && reflectivity <= 1.0)) throw std::invalid_argument("tap reflectivity must lie in (0, 1]");
  const double input_norm = s.norm_squared();
  if (input_norm == 0.0) throw std::domain_error("cannot tap the zero vector");
  const int ancilla = s.mode_count();
  const FockState mixed = apply_beamsplitter(s.with_vacuum_mode(), {mode, ancilla}, reflectivity);
  const FockState clicked = mixed.project_last_mode(1);

  HeraldResult result;
  result.success_prob = clicked.norm_squared() / input_norm;
  if (result.success_prob > 0.0) result.state = clicked.normalized();
  return result;
}

std::optional<TapComparison> compare_tap_to_annihilation(const FockState& s, double reflectivity) {
  const FockState direct = apply_annihilation(s, 0);
  if (direct.is_zero()) return std::nullopt;
  const HeraldResult tapped = subtract_via_tap(s, reflectivity);
  if (!tapped.state) return std::nullopt;
  return TapComparison{fidelity(*tapped.state, direct), aligned_distance(*tapped.state, direct),
                       tapped.success_prob};
}

std::optional<double> squeezed_single_photon_check(double r, int cutoff) {
  const FockState squeezed = apply_squeeze(FockState::vacuum(1, cutoff), 0, r);
  const FockState subtracted = apply_annihilation(squeezed, 0);
  if (subtracted.is_zero()) return std::nullopt;
  const FockState squeezed_photon = apply_squeeze(FockState::number({1}, cutoff), 0, r);
  return fidelity(subtracted, squeezed_photon);
}

std::optional<double> loss_commutation_check(const FockState& psi, double loss) {
  if (psi.mode_count() != 1) throw std::invalid_argument("loss check takes a single-mode state");
  const FockState with_env = psi.with_vacuum_mode();
  const FockState loss_then_subtract = apply_annihilation(apply_beamsplitter(with_env, {0, 1}, loss), 0);
  const FockState subtract_then_loss = apply_beamsplitter(apply_annihilation(with_env, 0), {0, 1}, loss);
  if (loss_then_subtract.is_zero() || subtract_then_loss.is_zero()) return std::nullopt;
  return aligned_distance(loss_then_subtract, subtract_then_loss);
}

std::pair<double, double> pair_apply_ratio_check(double c_gg, double c_ggp) {
  if (c_gg == 0.0 && c_ggp == 0.0) throw std::invalid_argument("pair operator is zero");
  constexpr int kCutoff = 4;
  const FockState start = FockState::number({1, 0}, kCutoff);
  const FockState same_mode = apply_creation(apply_creation(start, 0), 0);
  const FockState cross_mode = apply_creation(apply_creation(start, 0), 1);

  std::vector<cplx> amps(start.dimension());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = c_gg * same_mode.amplitudes()[i] + 2.0 * c_ggp * cross_mode.amplitudes()[i];
  }
  const FockState out = FockState::from_amplitudes(2, kCutoff, std::move(amps));
  const double total = out.norm_squared();
  return {std::norm(out.amplitude({3, 0})) / total, std::norm(out.amplitude({2, 1})) / total};
}

}  // namespace catfilter

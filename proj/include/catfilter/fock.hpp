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

#ifndef CATFILTER_FOCK_HPP
#define CATFILTER_FOCK_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace catfilter {

using cplx = std::complex<double>;

inline constexpr int kMaxFockModes = 3;
inline constexpr int kDefaultCutoff = 40;
/// Probability allowed in the top two photon-number shells of any mode.
inline constexpr double kFockLeakageTolerance = 1e-10;

/// Pure state of 1 to 3 bosonic modes truncated at `cutoff` photons per mode
/// (inclusive). Amplitudes are stored row-major with mode 0 slowest.
/// Values are immutable; every operation returns a new state.
class FockState {
 public:
  static FockState vacuum(int mode_count, int cutoff);
  static FockState number(std::vector<int> photons, int cutoff);
  static FockState from_amplitudes(int mode_count, int cutoff, std::vector<cplx> amplitudes);

  int mode_count() const { return modes_; }
  int cutoff() const { return cutoff_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }

  std::size_t index_of(std::span<const int> photons) const;
  std::vector<int> photons_at(std::size_t index) const;
  cplx amplitude(std::span<const int> photons) const { return amplitudes_[index_of(photons)]; }
  cplx amplitude(std::initializer_list<int> photons) const;

  double norm_squared() const;
  /// True for the zero vector, e.g. the result of annihilating the vacuum.
  bool is_zero() const { return norm_squared() == 0.0; }
  /// Throws std::domain_error for the zero vector.
  FockState normalized() const;
  FockState scaled(cplx factor) const;

  /// Probability (relative to the state norm) of `mode` holding cutoff-1 or
  /// cutoff photons.
  double top_shell_probability(int mode) const;
  double max_top_shell_probability() const;

  /// Tensor product with a vacuum mode appended last.
  FockState with_vacuum_mode() const;
  /// Unnormalized projection of the last mode onto |n>, which is removed.
  FockState project_last_mode(int n) const;

 private:
  FockState(int modes, int cutoff, std::vector<cplx> amplitudes);

  int modes_;
  int cutoff_;
  std::vector<cplx> amplitudes_;
};

cplx inner_product(const FockState& a, const FockState& b);
/// |<a|b>|^2 / (<a|a><b|b>); throws std::domain_error for a zero vector.
double fidelity(const FockState& a, const FockState& b);
/// || N(a) - e^{i phi} N(b) || with phi chosen to minimize it.
double aligned_distance(const FockState& a, const FockState& b);

FockState apply_creation(const FockState& s, int mode);
FockState apply_annihilation(const FockState& s, int mode);

/// Beamsplitter of reflectivity R between modes i and j:
///   B a_i^dag B^dag = sqrt(1-R) a_i^dag + sqrt(R) a_j^dag.
/// Each fixed-total-photon block is exponentiated exactly; amplitude pushed
/// past the cutoff, or into the top two shells, beyond `leakage_tolerance`
/// raises CutoffError.
FockState apply_beamsplitter(const FockState& s, std::pair<int, int> modes, double reflectivity,
                             double leakage_tolerance = kFockLeakageTolerance);

/// S(r) = exp[(r a^dag^2 - r a^2) / 2] on one mode, by scaling-and-squaring
/// on the truncated generator.
FockState apply_squeeze(const FockState& s, int mode, double r,
                        double leakage_tolerance = kFockLeakageTolerance);

struct HeraldResult {
  std::optional<FockState> state;  ///< empty when the projection vanishes
  double success_prob = 0.0;
};

/// Taps mode `mode` with a beamsplitter of reflectivity R into a fresh vacuum
/// ancilla and post-selects one photon there.
HeraldResult subtract_via_tap(const FockState& s, double reflectivity, int mode = 0);

struct TapComparison {
  double fidelity;
  double distance;  ///< aligned_distance, first order in R
  double success_prob;
};

/// Heralded tap output against N(a |psi>). Empty for the vacuum.
std::optional<TapComparison> compare_tap_to_annihilation(const FockState& s, double reflectivity);

/// Fidelity of N(a S(r)|0>) with N(S(r)|1>). Empty at r = 0, where the
/// subtracted state is the zero vector.
std::optional<double> squeezed_single_photon_check(double r, int cutoff = kDefaultCutoff);

/// aligned_distance between a B(L)|psi,0> and B(L) a|psi,0> for a single-mode
/// psi. Empty when psi has no photons to subtract.
std::optional<double> loss_commutation_check(const FockState& psi, double loss);

/// Normalized probabilities of |3,0> and |2,1> after applying
/// c_gg a^dag^2 + 2 c_ggp a^dag b^dag to |1,0>.
std::pair<double, double> pair_apply_ratio_check(double c_gg, double c_ggp);

/// CSV dump `n1[,n2[,n3]],re,im` of amplitudes with modulus above threshold.
void write_csv(std::ostream& out, const FockState& s, double threshold = 1e-12);

}  // namespace catfilter

#endif  // CATFILTER_FOCK_HPP

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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "catfilter/errors.hpp"
#include "catfilter/fock.hpp"

namespace catfilter {
namespace {

// Random state with no population in the top `headroom` shells of any mode.
FockState random_state(int modes, int cutoff, int headroom, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  FockState shape = FockState::vacuum(modes, cutoff);
  std::vector<cplx> a(shape.dimension());
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool inside = true;
    for (int n : shape.photons_at(i)) inside = inside && n <= cutoff - headroom;
    if (inside) a[i] = {gauss(rng), gauss(rng)};
  }
  return FockState::from_amplitudes(modes, cutoff, std::move(a)).normalized();
}

double max_difference(const FockState& a, const FockState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  return worst;
}

TEST(FockState, Layout) {
  const FockState s = FockState::number({2, 0, 1}, 3);
  EXPECT_EQ(s.dimension(), 64u);
  EXPECT_EQ(s.amplitude({2, 0, 1}), cplx(1.0));
  EXPECT_EQ(s.photons_at(s.index_of(std::vector<int>{1, 3, 2})), (std::vector<int>{1, 3, 2}));
  EXPECT_THROW(FockState::vacuum(4, 3), std::invalid_argument);
  EXPECT_THROW(FockState::number({5}, 3), std::out_of_range);
}

TEST(Ladder, CreationAndAnnihilation) {
  const int c = 6;
  EXPECT_EQ(apply_creation(FockState::vacuum(1, c), 0).amplitude({1}), cplx(1.0));
  EXPECT_NEAR(apply_creation(FockState::number({1}, c), 0).amplitude({2}).real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(apply_annihilation(FockState::number({2}, c), 0).amplitude({1}).real(), std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(apply_annihilation(FockState::vacuum(1, c), 0).is_zero());
  EXPECT_THROW(apply_creation(FockState::number({c}, c), 0), CutoffError);
}

TEST(Ladder, AdjointAndCommutator) {
  for (int mode : {0, 1}) {
    const FockState psi = random_state(2, 8, 1, 11);
    const FockState phi = random_state(2, 8, 1, 12);
    const cplx lhs = inner_product(psi, apply_creation(phi, mode));
    const cplx rhs = inner_product(apply_annihilation(psi, mode), phi);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);

    const FockState s = random_state(2, 8, 2, 13);
    const FockState a_adag = apply_annihilation(apply_creation(s, mode), mode);
    const FockState adag_a = apply_creation(apply_annihilation(s, mode), mode);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      worst = std::max(worst, std::abs(a_adag.amplitudes()[i] - adag_a.amplitudes()[i] - s.amplitudes()[i]));
    }
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(Beamsplitter, MixingRule) {
  const double R = 0.3;
  const FockState out = apply_beamsplitter(FockState::number({1, 0}, 4), {0, 1}, R);
  EXPECT_NEAR(out.amplitude({1, 0}).real(), std::sqrt(1.0 - R), 1e-14);
  EXPECT_NEAR(out.amplitude({0, 1}).real(), std::sqrt(R), 1e-14);
  const FockState vac = apply_beamsplitter(FockState::vacuum(2, 4), {0, 1}, R);
  EXPECT_NEAR(vac.amplitude({0, 0}).real(), 1.0, 1e-15);
}

TEST(Beamsplitter, TwoPhotonInterferenceOracle) {
  // A balanced splitter sends |1,1> to (|2,0> - |0,2>)/sqrt2 up to sign.
  const double R = 0.5;
  const FockState out = apply_beamsplitter(FockState::number({1, 1}, 4), {0, 1}, R);
  EXPECT_NEAR(std::abs(out.amplitude({1, 1})), 0.0, 1e-14);  // Hong-Ou-Mandel
  EXPECT_NEAR(std::norm(out.amplitude({2, 0})), 0.5, 1e-14);
  EXPECT_NEAR(std::norm(out.amplitude({0, 2})), 0.5, 1e-14);
}

TEST(Beamsplitter, UnitaryAndIdentityAtZero) {
  const FockState s = random_state(3, 6, 3, 7);
  EXPECT_LT(max_difference(apply_beamsplitter(s, {0, 2}, 0.0), s), 1e-12);
  const FockState small = random_state(2, 12, 7, 8);
  EXPECT_NEAR(apply_beamsplitter(small, {1, 0}, 0.37).norm_squared(), 1.0, 1e-10);
  EXPECT_THROW(apply_beamsplitter(s, {0, 0}, 0.1), std::invalid_argument);
  EXPECT_THROW(apply_beamsplitter(s, {0, 1}, 1.5), std::invalid_argument);
}

TEST(Beamsplitter, OverflowIsReported) {
  EXPECT_THROW(apply_beamsplitter(FockState::number({4, 4}, 4), {0, 1}, 0.5), CutoffError);
}

TEST(Squeeze, VacuumOverlapOracle) {
  const FockState s = apply_squeeze(FockState::vacuum(1, 40), 0, 0.5);
  EXPECT_NEAR(s.amplitude({0}).real(), 1.0 / std::sqrt(std::cosh(0.5)), 1e-10);
  // |<2n|S(r)|0>| = tanh(r)^n sqrt((2n)!) / (2^n n! sqrt(cosh r)).
  for (int n = 1; n < 6; ++n) {
    const double mag = std::pow(std::tanh(0.5), n) * std::sqrt(std::tgamma(2 * n + 1.0)) /
                       (std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::cosh(0.5)));
    EXPECT_NEAR(std::abs(s.amplitude({2 * n})), mag, 1e-10);
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-8);
}

TEST(Squeeze, ParityAndInverse) {
  const FockState s = apply_squeeze(FockState::vacuum(1, 40), 0, 0.5);
  for (int n = 1; n <= 40; n += 2) EXPECT_LE(std::abs(s.amplitude({n})), 1e-10);
  // Squeezing a six-photon state still leaves ~1e-7 in shell 39, hence 60.
  const FockState psi = random_state(2, 60, 54, 9);
  EXPECT_LT(max_difference(apply_squeeze(apply_squeeze(psi, 1, 0.4), 1, -0.4), psi), 1e-8);
}

TEST(Squeeze, LeakageIsReportedWithSuggestion) {
  try {
    apply_squeeze(FockState::vacuum(1, 10), 0, 1.2);
    FAIL() << "expected CutoffError";
  } catch (const CutoffError& e) {
    EXPECT_NE(std::string(e.what()).find("try cutoff"), std::string::npos);
  }
}

TEST(Tap, NumberStateGivesExactSubtraction) {
  const HeraldResult h = subtract_via_tap(FockState::number({2}, 8), 1e-3);
  ASSERT_TRUE(h.state.has_value());
  EXPECT_NEAR(std::norm(h.state->amplitude({1})), 1.0, 1e-14);
  // Two photons, each reflected with probability R: 2 R (1 - R).
  EXPECT_NEAR(h.success_prob, 2.0 * 1e-3 * (1.0 - 1e-3), 1e-15);
}

TEST(Tap, SqueezedVacuumApproachesAnnihilation) {
  const FockState psi = apply_squeeze(FockState::vacuum(1, 40), 0, 0.5);
  const auto c = compare_tap_to_annihilation(psi, 1e-3);
  ASSERT_TRUE(c.has_value());
  EXPECT_GE(c->fidelity, 1.0 - 5e-3);
  // Leading order success probability R <n> with <n> = sinh^2 r.
  EXPECT_NEAR(c->success_prob / (1e-3 * std::pow(std::sinh(0.5), 2)), 1.0, 5e-3);
}

TEST(Tap, DeviationIsLinearInReflectivity) {
  const FockState psi = apply_squeeze(FockState::vacuum(1, 40), 0, 0.5);
  double prev_distance = 0.0;
  double prev_infidelity = 0.0;
  for (double R : {1e-2, 1e-3, 1e-4}) {
    const auto c = compare_tap_to_annihilation(psi, R).value();
    if (prev_distance > 0.0) {
      EXPECT_NEAR(prev_distance / c.distance, 10.0, 0.1);
      // Fidelity loss is the square of the state distance.
      EXPECT_NEAR(prev_infidelity / (1.0 - c.fidelity), 100.0, 2.0);
    }
    prev_distance = c.distance;
    prev_infidelity = 1.0 - c.fidelity;
  }
}

TEST(Tap, VacuumIsFlagged) {
  const HeraldResult h = subtract_via_tap(FockState::vacuum(1, 4), 0.1);
  EXPECT_FALSE(h.state.has_value());
  EXPECT_EQ(h.success_prob, 0.0);
  EXPECT_FALSE(compare_tap_to_annihilation(FockState::vacuum(1, 4), 0.1).has_value());
}

TEST(Identities, SqueezedSinglePhoton) {
  const auto f = squeezed_single_photon_check(0.5, 40);
  ASSERT_TRUE(f.has_value());
  EXPECT_GE(*f, 1.0 - 1e-8);
  EXPECT_FALSE(squeezed_single_photon_check(0.0, 40).has_value());
  const FockState heralded = apply_annihilation(apply_squeeze(FockState::vacuum(1, 40), 0, 0.5), 0).normalized();
  for (int n = 0; n <= 40; n += 2) EXPECT_LE(std::abs(heralded.amplitude({n})), 1e-8);
}

TEST(Identities, LossCommutesWithSubtraction) {
  const FockState sq = apply_squeeze(FockState::vacuum(1, 40), 0, 0.3);
  EXPECT_LE(loss_commutation_check(sq, 0.2).value(), 1e-9);
  EXPECT_LE(loss_commutation_check(sq, 0.0).value(), 1e-12);
  EXPECT_LE(loss_commutation_check(FockState::number({1}, 4), 0.5).value(), 1e-12);
  EXPECT_FALSE(loss_commutation_check(FockState::vacuum(1, 4), 0.5).has_value());
}

TEST(Identities, PairApplicationBias) {
  const auto [p30, p21] = pair_apply_ratio_check(1.0, 1.0);
  EXPECT_NEAR(p30 / p21, 3.0 / 4.0, 1e-10);
  EXPECT_NEAR(p30 + p21, 1.0, 1e-14);
  EXPECT_EQ(pair_apply_ratio_check(1.0, 0.0).second, 0.0);
  const auto [q30, q21] = pair_apply_ratio_check(3.0, 1.0);
  EXPECT_NEAR(q30 / q21, 27.0 / 4.0, 1e-10);
  EXPECT_THROW(pair_apply_ratio_check(0.0, 0.0), std::invalid_argument);
}

TEST(FockCsv, DumpsSignificantAmplitudes) {
  std::ostringstream out;
  write_csv(out, apply_beamsplitter(FockState::number({1, 0}, 3), {0, 1}, 0.25));
  EXPECT_EQ(out.str(),
            "n1,n2,re,im\n"
            "0,1,5.000000000000e-01,0.000000000000e+00\n"
            "1,0,8.660254037844e-01,0.000000000000e+00\n");
}

}  // namespace
}  // namespace catfilter

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
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include "catfilter/filter.hpp"
#include "catfilter/wavepacket.hpp"

namespace catfilter {
namespace {

constexpr double kPi = std::numbers::pi;

// Power spectrum of the unit Lorentzian wavepacket sqrt(a) exp(-a|t|).
double lorentz_power(double a, double w) { return 2.0 * a * a * a / (kPi * (a * a + w * w) * (a * a + w * w)); }

// Both-sided integral of an even integrand.
template <class F>
double even_integral(F f) {
  boost::math::quadrature::exp_sinh<double> half;
  return 2.0 * half.integrate(f, 0.0, INFINITY);
}

TEST(Variances, NoPumpIsVacuum) {
  const auto v = wavepacket_variances(lorentz_wavepacket(1.0, 1.0), {1.0, 0.0});
  EXPECT_NEAR(v.v_plus_g, 1.0, 1e-14);
  EXPECT_NEAR(v.v_minus_g, 1.0, 1e-14);
}

TEST(Variances, MatchQuadratureOracle) {
  for (double e : {0.03, 0.3, 0.7}) {
    for (double rel : {0.05, 1.0, 20.0}) {
      const OpoParams p{1.0, e};
      const auto v = wavepacket_variances(lorentz_wavepacket(rel, 1.0), p);
      const double plus = even_integral([&](double w) { return lorentz_power(rel, w) * spectrum(p, w).v_plus; });
      const double minus = even_integral([&](double w) { return lorentz_power(rel, w) * spectrum(p, w).v_minus; });
      EXPECT_NEAR(v.v_plus_g, plus, 1e-10 * plus) << e << " " << rel;
      EXPECT_NEAR(v.v_minus_g, minus, 1e-10) << e << " " << rel;
    }
  }
}

TEST(Variances, SampledModeAgreesWithClosedForm) {
  const OpoParams p{1.0, 0.3};
  const Signal g = lorentz_wavepacket(1.0, 1.0);
  const Grid grid = default_time_grid(1.0);
  const auto closed = wavepacket_variances(g, p);
  const auto sampled = wavepacket_variances(normalize(g.render(grid)), p);
  EXPECT_NEAR(sampled.v_plus_g, closed.v_plus_g, 1e-6);
  EXPECT_NEAR(sampled.v_minus_g, closed.v_minus_g, 1e-6);
}

TEST(Variances, NarrowbandSamplesTheSpectrumPeak) {
  const auto v = wavepacket_variances(lorentz_wavepacket(1e-3, 1.0), {1.0, 0.3});
  EXPECT_NEAR(v.v_plus_g, 1.69 / 0.49, 0.01 * 1.69 / 0.49);
}

TEST(Variances, PreconditionsAreEnforced) {
  const OpoParams p{1.0, 0.3};
  EXPECT_THROW(wavepacket_variances(both_side_exp(1.0).scaled(2.0), p), std::invalid_argument);
  EXPECT_THROW(wavepacket_variances(lorentz_wavepacket(1.0, 1.0).scaled(cplx(0.0, 1.0)), p), std::invalid_argument);
  EXPECT_THROW(wavepacket_variances(normalize(combine(1.0, both_side_exp(1.0), cplx(0.0, 1.0), causal_exp(2.0))), p),
               std::invalid_argument);
}

TEST(Variances, ImpurityBound) {
  for (double e : {0.03, 0.3, 0.7}) {
    for (int i = 0; i < 20; ++i) {
      const double rel = std::pow(10.0, -2.0 + 4.0 * i / 19.0);
      const auto v = wavepacket_variances(lorentz_wavepacket(rel, 1.0), {1.0, e});
      EXPECT_GE(v.v_plus_g * v.v_minus_g, 1.0 - 1e-10);
    }
  }
  const auto v = wavepacket_variances(lorentz_wavepacket(1.0, 1.0), {1.0, 0.03});
  EXPECT_GT(v.v_plus_g * v.v_minus_g, 1.0);
}

TEST(LorentzWavepacket, UnitNormAndPeak) {
  const Signal g = lorentz_wavepacket(1.0, 1.0);
  EXPECT_NEAR(norm(g), 1.0, 1e-15);
  EXPECT_NEAR(g.value(0.0).real(), 1.0, 1e-15);
  EXPECT_NEAR(lorentz_wavepacket(0.5, 2.0).value(0.0).real(), 1.0, 1e-15);
  EXPECT_THROW(lorentz_wavepacket(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(lorentz_wavepacket(1.0, -1.0), std::invalid_argument);
}

TEST(EquivalentLoss, PureSqueezingHasNoLoss) {
  const auto l = equivalent_loss({std::exp(1.0), std::exp(-1.0), 1.0});
  ASSERT_FALSE(l.indefinite());
  EXPECT_NEAR(*l.value, 0.0, 1e-15);
}

TEST(EquivalentLoss, VacuumIsIndefinite) {
  EXPECT_TRUE(equivalent_loss({1.0, 1.0, 1.0}).indefinite());
  EXPECT_TRUE(equiv_loss_curve({1.0, 0.0}, std::vector<double>{1.0}).front().loss.indefinite());
}

TEST(EquivalentLoss, TenPercentAtMatchedBandwidth) {
  for (double e : {0.03, 0.3}) {
    const auto l = equivalent_loss(wavepacket_variances(lorentz_wavepacket(1.0, 1.0), {1.0, e}));
    EXPECT_NEAR(*l.value, 0.1, 0.005) << "epsilon = " << e;
  }
}

TEST(EquivalentLoss, WeakPumpOracle) {
  // Second order in the pump: L = 1 - A^2 / B with A = <|g~|^2 r~> and
  // B = <|g~|^2 r~^2>, integrated independently.
  const OpoParams p{1.0, 0.01};
  const double a = even_integral([&](double w) { return lorentz_power(1.0, w) * squeezing_parameter(p, w); });
  const double b = even_integral([&](double w) { return lorentz_power(1.0, w) * std::pow(squeezing_parameter(p, w), 2); });
  const double oracle = 1.0 - a * a / b;
  EXPECT_NEAR(oracle, 0.1, 1e-3);
  const auto l = equivalent_loss(wavepacket_variances(lorentz_wavepacket(1.0, 1.0), p));
  EXPECT_NEAR(*l.value, oracle, 1e-3);
  EXPECT_NEAR(*l.value, 0.1, 1e-3);
}

TEST(EquivalentLoss, CurveVanishesForNarrowWavepackets) {
  std::vector<double> rel;
  for (int i = 0; i < 41; ++i) rel.push_back(std::pow(10.0, -2.0 + 0.1 * i));
  for (double e : {0.03, 0.3, 0.7}) {
    const auto curve = equiv_loss_curve({1.0, e}, rel);
    EXPECT_LT(*curve.front().loss.value, 1e-3);
    for (const auto& pt : curve) {
      EXPECT_GE(*pt.loss.value, 0.0);
      EXPECT_LT(*pt.loss.value, 1.0);
    }
    for (std::size_t i = 1; i < 21; ++i) EXPECT_GT(*curve[i].loss.value, *curve[i - 1].loss.value);
  }
}

TEST(ModeMatch, BareOpoIsNineTenths) {
  const Signal r = both_side_exp(1.0);
  EXPECT_NEAR(mode_match(r, r), 0.9, 1e-14);
  EXPECT_NEAR(mode_match(normalize(r), r), 0.9, 1e-14);
  const Grid grid = default_time_grid(1.0);
  EXPECT_NEAR(mode_match(r.render(grid), r.render(grid)), 0.9, 1e-6);
}

TEST(ModeMatch, DeltaPairIsPerfect) {
  EXPECT_NEAR(mode_match(both_side_exp(1.0), delta_like()), 1.0, 1e-14);
  EXPECT_NEAR(mode_match(closed_hr_r(1.0, 0.4), delta_like()), 1.0, 1e-14);
}

TEST(ModeMatch, FilteredWavepacket) {
  const Signal r = both_side_exp(1.0);
  const Signal g = normalize(convolve(time_reverse(causal_exp(0.4).scaled(0.4)), r));
  EXPECT_NEAR(mode_match(g, r), 0.976908, 1e-5);
}

TEST(ModeMatch, InvariantUnderPhaseAndScale) {
  const Signal r = both_side_exp(1.0);
  const Signal g = closed_hr_r(1.0, 0.4);
  const double m = mode_match(g, r);
  EXPECT_NEAR(mode_match(g.scaled(std::polar(3.0, 0.7)), r), m, 1e-14);
  EXPECT_NEAR(mode_match(g, r.scaled(-0.2)), m, 1e-14);
  EXPECT_THROW(mode_match(Signal(), r), std::domain_error);
}

TEST(ModeMatch, ExplainsTheTenPercentLoss) {
  const Signal r = both_side_exp(1.0);
  const auto l = equivalent_loss(wavepacket_variances(lorentz_wavepacket(1.0, 1.0), {1.0, 0.01}));
  EXPECT_NEAR(1.0 - mode_match(normalize(r), r), *l.value, 1e-3);
}

TEST(PairModeLadder, HeadRatioIsNineToOne) {
  const Signal r = both_side_exp(1.0);
  const ModeLadder ladder = pair_mode_ladder(normalize(r), r, 1);
  ASSERT_EQ(ladder.offdiag_coeffs.size(), 1u);
  const double c00 = std::norm(ladder.diag_coeffs[0]);
  const double c01 = std::norm(ladder.offdiag_coeffs[0]);
  EXPECT_NEAR(c00 / c01, 9.0, 1e-12);
  EXPECT_NEAR(ladder.diag_coeffs[0].real(), inner_product(normalize(r), convolve(normalize(r), r)).real(), 1e-9);
}

TEST(PairModeLadder, DeltaPairTerminatesImmediately) {
  const ModeLadder ladder = pair_mode_ladder(lorentz_wavepacket(1.0, 1.0), delta_like(), 4);
  EXPECT_TRUE(ladder.terminated_early);
  for (const cplx& c : ladder.offdiag_coeffs) EXPECT_NEAR(std::abs(c), 0.0, 1e-12);
  EXPECT_NEAR(ladder.diag_coeffs[0].real(), 1.0, 1e-14);
}

TEST(PairModeLadder, ModesAreOrthonormal) {
  const Signal r = both_side_exp(1.0);
  const ModeLadder ladder = pair_mode_ladder(normalize(r), r, 3);
  ASSERT_GE(ladder.modes.size(), 4u);
  for (std::size_t i = 0; i < ladder.modes.size(); ++i) {
    for (std::size_t j = 0; j < ladder.modes.size(); ++j) {
      const cplx ip = inner_product(ladder.modes[i], ladder.modes[j]);
      EXPECT_NEAR(std::abs(ip - (i == j ? 1.0 : 0.0)), 0.0, 1e-8) << i << "," << j;
    }
  }
  for (const cplx& c : ladder.offdiag_coeffs) EXPECT_GE(c.real(), 0.0);
}

}  // namespace
}  // namespace catfilter

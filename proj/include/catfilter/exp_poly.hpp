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

#ifndef CATFILTER_EXP_POLY_HPP
#define CATFILTER_EXP_POLY_HPP

#include <complex>
#include <vector>

namespace catfilter {

using cplx = std::complex<double>;

/// Open half line carrying a piece of a piecewise function. The point t = 0
/// belongs to neither side; see ExpPoly::value.
enum class HalfLine { kNegative, kPositive };

/// poly(t) * exp(rate * t) restricted to one half line; poly[k] multiplies t^k.
struct ExpPiece {
  HalfLine side;
  cplx rate;
  std::vector<cplx> poly;
};

/// Piecewise exponential-polynomial function of time
///
///   f(t) = sum over pieces on the side of t of  poly(t) * exp(rate * t).
///
/// This family is closed under convolution, time reversal, conjugation and
/// linear combination, and has closed-form inner products and Fourier
/// transforms. Breakpoints are restricted to t = 0, which covers every
/// correlation, filter response and heralded mode in this library.
///
/// Pieces sharing a side and a rate are merged on construction.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(std::vector<ExpPiece> pieces);

  /// amplitude * exp(-rate |t|)
  static ExpPoly both_side_exp(double rate, cplx amplitude = 1.0);
  /// amplitude * exp(-rate t) u(t)
  static ExpPoly causal_exp(double rate, cplx amplitude = 1.0);
  /// amplitude * exp(rate t) u(-t)
  static ExpPoly anti_causal_exp(double rate, cplx amplitude = 1.0);

  const std::vector<ExpPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  cplx left_limit(double t) const;
  cplx right_limit(double t) const;
  /// f(t) for t != 0; at t = 0 the mean of the one-sided limits.
  cplx value(double t) const;
  cplx operator()(double t) const { return value(t); }
  /// f(0+) - f(0-)
  cplx jump_at_zero() const { return right_limit(0.0) - left_limit(0.0); }

  /// (1/sqrt(2 pi)) * integral f(t) exp(i omega t) dt, in closed form.
  cplx spectrum(double omega) const;

  ExpPoly scaled(cplx factor) const;
  ExpPoly conj() const;
  /// f(-t)
  ExpPoly reversed() const;

  /// Every piece decays on its half line.
  bool is_integrable() const;
  /// Largest |Im| over all rates and coefficients.
  double max_imag_part() const;
  /// Smallest and largest |Re rate| over all pieces.
  double slowest_rate() const;
  double fastest_rate() const;

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);

 private:
  std::vector<ExpPiece> pieces_;
};

/// integral conj(f(t)) g(t) dt. Throws ClosedFormError when divergent.
cplx inner_product(const ExpPoly& f, const ExpPoly& g);

/// (f * g)(t) = integral f(tau) g(t - tau) dtau, exactly. Coincident rates
/// are handled by the confluent (polynomial) branch; rates that differ by
/// less than a relative 1e-9 without being equal throw ClosedFormError.
ExpPoly convolve(const ExpPoly& f, const ExpPoly& g);

}  // namespace catfilter

#endif  // CATFILTER_EXP_POLY_HPP

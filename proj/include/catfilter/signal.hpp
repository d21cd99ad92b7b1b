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

#ifndef CATFILTER_SIGNAL_HPP
#define CATFILTER_SIGNAL_HPP

#include <complex>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "catfilter/exp_poly.hpp"
#include "catfilter/grid.hpp"

namespace catfilter {

enum class Domain { kTime, kFrequency };

/// Complex mode function of time or angular frequency.
///
/// A signal is either closed-form or sampled on a Grid. Closed forms are
/// exponential polynomials (ExpPoly) or the convolution identity (DeltaLike).
/// A closed-form frequency-domain signal stores its time-domain partner and
/// evaluates the transform analytically, so fourier/inverse_fourier are exact
/// on closed forms.
///
/// Fourier convention, unitary with symmetric factors:
///   f~(omega) = (1/sqrt(2 pi)) * integral f(t) exp(+i omega t) dt.
class Signal {
 public:
  struct Delta {};
  struct Sampled {
    Grid grid;
    std::vector<cplx> values;
  };

  /// The zero function.
  Signal() : Signal(Domain::kTime, ExpPoly()) {}
  Signal(Domain domain, ExpPoly time_partner);
  static Signal delta();
  static Signal sampled(Domain domain, Grid grid, std::vector<cplx> values);

  Domain domain() const { return domain_; }
  bool is_sampled() const { return std::holds_alternative<Sampled>(form_); }
  bool is_delta() const { return std::holds_alternative<Delta>(form_); }
  bool is_exp_poly() const { return std::holds_alternative<ExpPoly>(form_); }
  bool is_closed_form() const { return !is_sampled(); }

  /// The exponential polynomial (its time-domain partner for frequency
  /// signals). Throws std::logic_error for other forms.
  const ExpPoly& exp_poly() const;
  const Grid& grid() const;
  std::span<const cplx> samples() const;

  /// Point evaluation of a closed form in its own domain.
  cplx value(double x) const;

  /// Samples of this signal on `grid`. A sampled signal renders only onto its
  /// own grid. Jumps at t = 0 are sampled at the mean of the one-sided limits,
  /// which keeps the trapezoidal rule second order for piecewise inputs.
  Signal render(const Grid& grid) const;

  Signal scaled(cplx factor) const;
  /// Pointwise complex conjugate in the signal's own domain.
  Signal conj() const;

  /// Largest |Im| of the stored representation.
  double max_imag_part() const;

 private:
  Signal(Domain domain, std::variant<ExpPoly, Delta, Sampled> form)
      : domain_(domain), form_(std::move(form)) {}

  Domain domain_;
  std::variant<ExpPoly, Delta, Sampled> form_;
};

// Closed-form descriptors. Rates are positive.
Signal both_side_exp(double rate);      ///< exp(-rate |t|)
Signal causal_exp(double rate);         ///< exp(-rate t) u(t)
Signal anti_causal_exp(double rate);    ///< exp(rate t) u(-t)
Signal lorentzian(double rate);         ///< rate / (rate^2 + omega^2), frequency domain
Signal delta_like();                    ///< convolution identity
Signal piecewise_exp_poly(std::vector<ExpPiece> pieces);

/// integral conj(f) g over the common domain. Sampled operands must share a
/// grid; a closed form is rendered onto the other operand's grid. Sampled
/// integrals use the periodic trapezoidal rule (the plain node sum times the
/// step), which is exactly consistent with the discrete transform.
cplx inner_product(const Signal& f, const Signal& g);
double norm(const Signal& f);
/// f / ||f||. Throws std::domain_error for a zero-norm input.
Signal normalize(const Signal& f);

/// Linear combination a*f + b*g.
Signal combine(cplx a, const Signal& f, cplx b, const Signal& g);

/// f * g. Closed exponential polynomials convolve exactly; otherwise through
/// the product of spectra on a shared centered grid. Throws GridError when the
/// result does not decay to 1e-9 of its peak before the grid edges.
Signal convolve(const Signal& f, const Signal& g);

/// Edge-leakage threshold applied by the sampled transforms: the largest
/// magnitude in the outer 1/64 of the output, relative to the peak.
inline constexpr double kDefaultLeakageTolerance = 1e-2;

Signal fourier(const Signal& f, double leakage_tolerance = kDefaultLeakageTolerance);
Signal inverse_fourier(const Signal& f, double leakage_tolerance = kDefaultLeakageTolerance);

/// f^R(t) = f(-t). Sampled signals need a centered grid and are reversed
/// periodically (node i goes to node (count - i) mod count).
Signal time_reverse(const Signal& f);

struct GramSchmidtResult {
  /// <g, N(v)>
  cplx parallel_coeff;
  /// ||N(v) - parallel_coeff g||, i.e. sqrt(1 - |parallel_coeff|^2).
  double orthogonal_coeff;
  /// Normalized component of v orthogonal to g; empty when v is parallel to g.
  std::optional<Signal> orthogonal;
  bool degenerate() const { return !orthogonal.has_value(); }
};

/// Splits N(v) = parallel_coeff * g + orthogonal_coeff * orthogonal, for a
/// normalized g. v parallel to g within 1e-7 yields a degenerate result.
GramSchmidtResult gram_schmidt_step(const Signal& g, const Signal& v);

}  // namespace catfilter

#endif  // CATFILTER_SIGNAL_HPP

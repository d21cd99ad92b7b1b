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

#include "catfilter/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catfilter/errors.hpp"

namespace catfilter {
namespace {

constexpr double kNearDegenerateRates = 1e-9;

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

double binomial(std::size_t n, std::size_t k) {
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    b *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return b;
}

void trim(std::vector<cplx>& poly) {
  while (!poly.empty() && poly.back() == cplx(0.0)) poly.pop_back();
}

void accumulate(std::vector<cplx>& into, const std::vector<cplx>& p, cplx factor = 1.0) {
  if (into.size() < p.size()) into.resize(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) into[k] += factor * p[k];
}

std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<cplx> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

cplx evaluate(const std::vector<cplx>& poly, double t) {
  cplx acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// integral over the whole half line of t^k exp(c t).
cplx half_line_moment(HalfLine side, std::size_t k, cplx c) {
  if (side == HalfLine::kPositive) {
    if (!(c.real() < 0.0)) throw ClosedFormError("divergent integral on t > 0");
    return factorial(k) / std::pow(-c, static_cast<double>(k + 1));
  }
  if (!(c.real() > 0.0)) throw ClosedFormError("divergent integral on t < 0");
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(k) / std::pow(c, static_cast<double>(k + 1));
}

// Antiderivative of t^k exp(c t), c != 0: exp(c t) * Phi_k(t).
std::vector<cplx> antiderivative_poly(std::size_t k, cplx c) {
  std::vector<cplx> phi(k + 1);
  cplx c_pow = c;
  double falling = 1.0;  // k!/(k-l)!
  for (std::size_t l = 0; l <= k; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    phi[k - l] = sign * falling / c_pow;
    falling *= static_cast<double>(k - l);
    c_pow *= c;
  }
  return phi;
}

// integral over tau between the limits of tau^k exp(c tau) as a function of t:
//   exp(c t) * moving(t) + fixed(t)
// `fixed` collects terms that carry no exp(c t); it is a polynomial in t only
// for the confluent case c == 0.
enum class Limits { kZeroToT, kTToZero, kTToInf, kZeroToInf, kMinusInfToZero, kMinusInfToT };

struct MomentIntegral {
  std::vector<cplx> moving;
  std::vector<cplx> fixed;
};

MomentIntegral moment_integral(std::size_t k, cplx c, Limits limits) {
  MomentIntegral out;
  if (c == cplx(0.0)) {
    std::vector<cplx> power(k + 2);
    power[k + 1] = 1.0 / static_cast<double>(k + 1);
    switch (limits) {
      case Limits::kZeroToT:
        out.fixed = power;
        return out;
      case Limits::kTToZero:
        out.fixed = power;
        for (auto& v : out.fixed) v = -v;
        return out;
      default:
        throw ClosedFormError("divergent convolution integral (non-decaying integrand)");
    }
  }
  const std::vector<cplx> phi = antiderivative_poly(k, c);
  const cplx at_zero = phi[0];
  switch (limits) {
    case Limits::kZeroToT:
      out.moving = phi;
      out.fixed = {-at_zero};
      break;
    case Limits::kTToZero:
      out.moving = phi;
      for (auto& v : out.moving) v = -v;
      out.fixed = {at_zero};
      break;
    case Limits::kTToInf:
      if (!(c.real() < 0.0)) throw ClosedFormError("divergent convolution integral");
      out.moving = phi;
      for (auto& v : out.moving) v = -v;
      break;
    case Limits::kZeroToInf:
      if (!(c.real() < 0.0)) throw ClosedFormError("divergent convolution integral");
      out.fixed = {-at_zero};
      break;
    case Limits::kMinusInfToZero:
      if (!(c.real() > 0.0)) throw ClosedFormError("divergent convolution integral");
      out.fixed = {at_zero};
      break;
    case Limits::kMinusInfToT:
      if (!(c.real() > 0.0)) throw ClosedFormError("divergent convolution integral");
      out.moving = phi;
      break;
  }
  return out;
}

// Convolution of a single pair of pieces onto one result side.
void convolve_pieces(const ExpPiece& a, const ExpPiece& b, HalfLine result_side, Limits limits,
                     std::vector<ExpPiece>& out) {
  const cplx c = a.rate - b.rate;
  if (c != cplx(0.0) &&
      std::abs(c) < kNearDegenerateRates * std::max({std::abs(a.rate), std::abs(b.rate), 1.0})) {
    throw ClosedFormError("decay rates nearly coincide; closed-form convolution is ill-conditioned");
  }
  // integrand: exp(beta t) * sum_j q_j sum_i C(j,i) t^(j-i) (-1)^i * sum_m p_m tau^(m+i) exp(c tau)
  std::vector<cplx> poly_alpha;  // multiplies exp(alpha t)
  std::vector<cplx> poly_beta;   // multiplies exp(beta t)
  for (std::size_t j = 0; j < b.poly.size(); ++j) {
    if (b.poly[j] == cplx(0.0)) continue;
    for (std::size_t i = 0; i <= j; ++i) {
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      const cplx outer = b.poly[j] * binomial(j, i) * sign;
      std::vector<cplx> t_power(j - i + 1);
      t_power[j - i] = 1.0;
      for (std::size_t m = 0; m < a.poly.size(); ++m) {
        if (a.poly[m] == cplx(0.0)) continue;
        const MomentIntegral mi = moment_integral(m + i, c, limits);
        const cplx factor = outer * a.poly[m];
        if (!mi.moving.empty()) accumulate(poly_alpha, multiply(t_power, mi.moving), factor);
        if (!mi.fixed.empty()) accumulate(poly_beta, multiply(t_power, mi.fixed), factor);
      }
    }
  }
  trim(poly_alpha);
  trim(poly_beta);
  if (!poly_alpha.empty()) out.push_back({result_side, a.rate, std::move(poly_alpha)});
  if (!poly_beta.empty()) out.push_back({result_side, b.rate, std::move(poly_beta)});
}

}  // namespace

ExpPoly::ExpPoly(std::vector<ExpPiece> pieces) {
  for (auto& piece : pieces) {
    trim(piece.poly);
    if (piece.poly.empty()) continue;
    auto match = std::find_if(pieces_.begin(), pieces_.end(), [&](const ExpPiece& p) {
      return p.side == piece.side && p.rate == piece.rate;
    });
    if (match == pieces_.end()) {
      pieces_.push_back(std::move(piece));
    } else {
      accumulate(match->poly, piece.poly);
      trim(match->poly);
    }
  }
  std::erase_if(pieces_, [](const ExpPiece& p) { return p.poly.empty(); });
}

ExpPoly ExpPoly::both_side_exp(double rate, cplx amplitude) {
  return ExpPoly({{HalfLine::kNegative, rate, {amplitude}}, {HalfLine::kPositive, -rate, {amplitude}}});
}

ExpPoly ExpPoly::causal_exp(double rate, cplx amplitude) {
  return ExpPoly({{HalfLine::kPositive, -rate, {amplitude}}});
}

ExpPoly ExpPoly::anti_causal_exp(double rate, cplx amplitude) {
  return ExpPoly({{HalfLine::kNegative, rate, {amplitude}}});
}

cplx ExpPoly::left_limit(double t) const {
  const HalfLine side = t > 0.0 ? HalfLine::kPositive : HalfLine::kNegative;
  cplx acc = 0.0;
  for (const auto& p : pieces_) {
    if (p.side == side) acc += evaluate(p.poly, t) * std::exp(p.rate * t);
  }
  return acc;
}

cplx ExpPoly::right_limit(double t) const {
  const HalfLine side = t < 0.0 ? HalfLine::kNegative : HalfLine::kPositive;
  cplx acc = 0.0;
  for (const auto& p : pieces_) {
    if (p.side == side) acc += evaluate(p.poly, t) * std::exp(p.rate * t);
  }
  return acc;
}

cplx ExpPoly::value(double t) const {
  if (t != 0.0) return left_limit(t);
  return 0.5 * (left_limit(0.0) + right_limit(0.0));
}

cplx ExpPoly::spectrum(double omega) const {
  cplx acc = 0.0;
  for (const auto& p : pieces_) {
    const cplx c = p.rate + cplx(0.0, omega);
    for (std::size_t k = 0; k < p.poly.size(); ++k) {
      acc += p.poly[k] * half_line_moment(p.side, k, c);
    }
  }
  return acc / std::sqrt(2.0 * std::numbers::pi);
}

ExpPoly ExpPoly::scaled(cplx factor) const {
  ExpPoly out = *this;
  if (factor == cplx(0.0)) return ExpPoly();
  for (auto& p : out.pieces_) {
    for (auto& c : p.poly) c *= factor;
  }
  return out;
}

ExpPoly ExpPoly::conj() const {
  ExpPoly out = *this;
  for (auto& p : out.pieces_) {
    p.rate = std::conj(p.rate);
    for (auto& c : p.poly) c = std::conj(c);
  }
  return out;
}

ExpPoly ExpPoly::reversed() const {
  ExpPoly out = *this;
  for (auto& p : out.pieces_) {
    p.side = p.side == HalfLine::kPositive ? HalfLine::kNegative : HalfLine::kPositive;
    p.rate = -p.rate;
    for (std::size_t k = 1; k < p.poly.size(); k += 2) p.poly[k] = -p.poly[k];
  }
  return out;
}

bool ExpPoly::is_integrable() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const ExpPiece& p) {
    return p.side == HalfLine::kPositive ? p.rate.real() < 0.0 : p.rate.real() > 0.0;
  });
}

double ExpPoly::max_imag_part() const {
  double m = 0.0;
  for (const auto& p : pieces_) {
    m = std::max(m, std::abs(p.rate.imag()));
    for (const auto& c : p.poly) m = std::max(m, std::abs(c.imag()));
  }
  return m;
}

double ExpPoly::slowest_rate() const {
  double m = 0.0;
  bool first = true;
  for (const auto& p : pieces_) {
    const double r = std::abs(p.rate.real());
    m = first ? r : std::min(m, r);
    first = false;
  }
  return m;
}

double ExpPoly::fastest_rate() const {
  double m = 0.0;
  for (const auto& p : pieces_) m = std::max(m, std::abs(p.rate.real()));
  return m;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpPiece> all = a.pieces_;
  all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
  return ExpPoly(std::move(all));
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + b.scaled(-1.0); }

cplx inner_product(const ExpPoly& f, const ExpPoly& g) {
  cplx acc = 0.0;
  for (const auto& pf : f.pieces()) {
    for (const auto& pg : g.pieces()) {
      if (pf.side != pg.side) continue;
      std::vector<cplx> conj_f(pf.poly.size());
      std::transform(pf.poly.begin(), pf.poly.end(), conj_f.begin(),
                     [](cplx c) { return std::conj(c); });
      const std::vector<cplx> prod = multiply(conj_f, pg.poly);
      const cplx c = std::conj(pf.rate) + pg.rate;
      for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] != cplx(0.0)) acc += prod[k] * half_line_moment(pf.side, k, c);
      }
    }
  }
  return acc;
}

ExpPoly convolve(const ExpPoly& f, const ExpPoly& g) {
  std::vector<ExpPiece> out;
  for (const auto& a : f.pieces()) {
    for (const auto& b : g.pieces()) {
      const bool a_pos = a.side == HalfLine::kPositive;
      const bool b_pos = b.side == HalfLine::kPositive;
      if (a_pos && b_pos) {
        convolve_pieces(a, b, HalfLine::kPositive, Limits::kZeroToT, out);
      } else if (!a_pos && !b_pos) {
        convolve_pieces(a, b, HalfLine::kNegative, Limits::kTToZero, out);
      } else if (a_pos) {
        convolve_pieces(a, b, HalfLine::kPositive, Limits::kTToInf, out);
        convolve_pieces(a, b, HalfLine::kNegative, Limits::kZeroToInf, out);
      } else {
        convolve_pieces(a, b, HalfLine::kPositive, Limits::kMinusInfToZero, out);
        convolve_pieces(a, b, HalfLine::kNegative, Limits::kMinusInfToT, out);
      }
    }
  }
  return ExpPoly(std::move(out));
}

}  // namespace catfilter

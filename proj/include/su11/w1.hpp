#pragma once

#include <cmath>
#include <complex>

#include "su11/params.hpp"
#include "su11/series.hpp"

namespace su11 {

/// The four degree-1 building blocks of the generating-function exponent:
///   u1 = -λ1 √T e^{-iθ1} sinh g
///   u2 =  √T (λ2 cosh g - λ3 e^{iθ1} sinh g)
///   u3 =  √T (λ3 cosh g - λ2 e^{-iθ1} sinh g)
///   u4 = -λ4 √T e^{iθ1} sinh g
struct W1Terms {
  TruncatedSeries u1, u2, u3, u4;

  W1Terms(const ModelParams& p, unsigned cap)
      : u1(cap), u2(cap), u3(cap), u4(cap) {
    const double sT = std::sqrt(p.T);
    const double ch = std::cosh(p.g);
    const double sh = std::sinh(p.g);
    const Complex eip = std::polar(1.0, p.theta1);
    const Complex eim = std::polar(1.0, -p.theta1);
    u1 = TruncatedSeries::variable(0, -sT * eim * sh, cap);
    u2 = series_add(TruncatedSeries::variable(1, sT * ch, cap),
                    TruncatedSeries::variable(2, -sT * eip * sh, cap));
    u3 = series_add(TruncatedSeries::variable(2, sT * ch, cap),
                    TruncatedSeries::variable(1, -sT * eim * sh, cap));
    u4 = TruncatedSeries::variable(3, -sT * eip * sh, cap);
  }
};

/// w1 = u1·u2 + u3·u4 + u3·α + (λ1 √T cosh g + u4)·α*.
///
/// A single transmittance T multiplies both modes; the printed per-mode
/// form is not recoverable from the u-definitions (each of u2, u3 mixes
/// λ-variables of both modes), so per-mode loss is not offered.
/// The result has zero constant term and total degree ≤ 2.
inline TruncatedSeries build_w1(const ModelParams& p, unsigned cap) {
  if (cap < 2) throw InvalidArgument("build_w1: cap must be >= 2");
  p.validate();
  const W1Terms u(p, cap);
  const double sT = std::sqrt(p.T);
  const double ch = std::cosh(p.g);
  const Complex a = p.alpha;
  const Complex ac = std::conj(p.alpha);

  TruncatedSeries w = series_mul(u.u1, u.u2);
  w = series_add(w, series_mul(u.u3, u.u4));
  w = series_add(w, series_mul(u.u3, TruncatedSeries::constant(a, cap)));
  const TruncatedSeries bra =
      series_add(TruncatedSeries::variable(0, sT * ch, cap), u.u4);
  w = series_add(w, series_mul(bra, TruncatedSeries::constant(ac, cap)));
  return w;
}

}  // namespace su11

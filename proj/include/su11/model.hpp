#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "su11/errors.hpp"
#include "su11/params.hpp"
#include "su11/series.hpp"
#include "su11/w1.hpp"

namespace su11 {

/// <X>, <X^2> and d<X>/dphi for one configuration, in the convention
/// X = a + a† (no 1/sqrt(2); phase sensitivity is invariant under any
/// uniform rescaling of X, see phase_sensitivity).
struct QuadratureStats {
  double mean_x = 0.0;
  double mean_x2 = 0.0;
  double dmean_x_dphi = 0.0;
};

namespace detail {
constexpr double kImagTol = 1e-9;
constexpr double kVarClamp = -1e-9;
constexpr double kDerivativeFloor = 1e-12;
constexpr double kDegenerateFloor = 1e-300;

inline double real_checked(Complex z, const char* what) {
  if (std::abs(z.imag()) >= kImagTol)
    throw NumericalInconsistency(std::string(what) +
                                 ": non-negligible imaginary part");
  return z.real();
}
}  // namespace detail

/// Phase-independent moment coefficients of one scheme, extracted once from
/// e^{w1}; every quantity below is then a cheap assembly in phi. Building
/// the table costs one series_exp at cap 2(m+n)+4.
class MomentTable {
 public:
  explicit MomentTable(const ModelParams& p) : p_(p) {
    p.validate();
    const unsigned cap = 2 * (p.m + p.n) + 4;
    const TruncatedSeries E = series_exp(build_w1(p, cap));
    const unsigned m = p.m, n = p.n;
    auto D = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
      return derivative_functional(E, MultiIndex(a, b, c, d));
    };

    const Complex denom = D(m, n, m, n);
    if (!(std::abs(denom) > detail::kDegenerateFloor))
      throw DegenerateState("normalization: subtraction outcome has zero probability");
    a2_ = 1.0 / detail::real_checked(denom, "normalization");
    if (!(a2_ > 0.0) || !std::isfinite(a2_))
      throw DegenerateState("normalization: non-positive success weight");

    const double ch = std::cosh(p.g);
    const double sh = std::sinh(p.g);
    const double s2g = std::sinh(2.0 * p.g);

    x_m1_ = ch * D(m + 1, n, m, n);
    x_p1_ = ch * D(m, n, m + 1, n);
    x_0_ = sh * (D(m, n, m, n + 1) + D(m, n + 1, m, n));

    x2_m2_ = ch * ch * D(m + 2, n, m, n);
    x2_p2_ = ch * ch * D(m, n, m + 2, n);
    x2_m1_ = s2g * (D(m + 1, n, m, n + 1) + D(m + 1, n + 1, m, n));
    x2_p1_ = s2g * (D(m, n + 1, m + 1, n) + D(m, n, m + 1, n + 1));
    x2_0_ = sh * sh * (D(m, n, m, n + 2) + D(m, n + 2, m, n)) +
            2.0 * ch * ch * D(m + 1, n, m + 1, n) +
            2.0 * sh * sh * D(m, n + 1, m, n + 1);

    na_ = a2_ * detail::real_checked(D(m + 1, n, m + 1, n), "mean n_a");
    nb_ = a2_ * detail::real_checked(D(m, n + 1, m, n + 1), "mean n_b");
    na2p_ = a2_ * detail::real_checked(D(m + 2, n, m + 2, n), "n_a moment");
  }

  const ModelParams& params() const { return p_; }
  double a_squared() const { return a2_; }
  double mean_photon() const { return na_ + nb_; }
  double mean_na() const { return na_; }

  double mean_x(double phi) const {
    const Complex e = std::polar(1.0, phi);
    return detail::real_checked(a2_ * (x_m1_ / e + x_p1_ * e + x_0_),
                                "mean_x");
  }

  double mean_x2(double phi) const {
    const Complex e = std::polar(1.0, phi);
    const Complex e2 = e * e;
    return detail::real_checked(
               a2_ * (x2_m2_ / e2 + x2_p2_ * e2 + x2_m1_ / e + x2_p1_ * e +
                      x2_0_),
               "mean_x2") +
           std::cosh(2.0 * p_.g);
  }

  double dmean_x_dphi(double phi) const {
    const Complex e = std::polar(1.0, phi);
    const Complex i{0.0, 1.0};
    return detail::real_checked(a2_ * (-i * x_m1_ / e + i * x_p1_ * e),
                                "dmean_x_dphi");
  }

  QuadratureStats quadratures(double phi) const {
    return {mean_x(phi), mean_x2(phi), dmean_x_dphi(phi)};
  }

  /// Error-propagation sensitivity; `scale` rescales the quadrature to
  /// scale*(a + a†) and cancels exactly between numerator and denominator.
  double phase_sensitivity(double phi, double scale = 1.0) const {
    const double x = scale * mean_x(phi);
    const double x2 = scale * scale * mean_x2(phi);
    const double dx = scale * dmean_x_dphi(phi);
    double var = x2 - x * x;
    if (var < 0.0) {
      if (var < detail::kVarClamp * scale * scale)
        throw NumericalInconsistency("phase_sensitivity: negative variance");
      var = 0.0;
    }
    if (std::abs(dx) < detail::kDerivativeFloor)
      throw SensitivityUndefined("phase_sensitivity: derivative below floor");
    return std::sqrt(var) / std::abs(dx);
  }

  /// 4 Var(n_a) of the subtracted state; meaningful at T = 1 (see qfi.hpp).
  double fisher_information() const {
    return 4.0 * (na2p_ + na_ - na_ * na_);
  }

 private:
  ModelParams p_;
  double a2_ = 0.0;
  Complex x_m1_{}, x_p1_{}, x_0_{};
  Complex x2_m2_{}, x2_p2_{}, x2_m1_{}, x2_p1_{}, x2_0_{};
  double na_ = 0.0, nb_ = 0.0, na2p_ = 0.0;
};

/// A^2 = 1 / (D_{m,n,m,n} e^{w1}).
inline double normalization(const ModelParams& p) {
  return MomentTable(p).a_squared();
}

inline double mean_x(const ModelParams& p) {
  return MomentTable(p).mean_x(p.phi);
}

inline double mean_x2(const ModelParams& p) {
  return MomentTable(p).mean_x2(p.phi);
}

inline double dmean_x_dphi(const ModelParams& p) {
  return MomentTable(p).dmean_x_dphi(p.phi);
}

inline double phase_sensitivity(const ModelParams& p, double scale = 1.0) {
  return MomentTable(p).phase_sensitivity(p.phi, scale);
}

/// Total mean photon number in both arms before the second OPA.
inline double mean_photon_N(const ModelParams& p) {
  return MomentTable(p).mean_photon();
}

/// (SQL, HL) = (1/sqrt(N), 1/N).
inline std::pair<double, double> sql_hl(double N) {
  if (!(N > 0.0)) throw InvalidArgument("sql_hl: N must be positive");
  return {1.0 / std::sqrt(N), 1.0 / N};
}

/// Finds real alpha > 0 with mean_photon_N(p with alpha) = target_N to
/// 1e-10 absolute, by bisection on a monotonicity-verified bracket.
inline double calibrate_alpha(double target_N, const ModelParams& p) {
  constexpr double kTol = 1e-10;
  auto N_of = [&](double a) {
    return MomentTable(p.with_alpha({a, 0.0})).mean_photon();
  };
  const double floor_N = N_of(0.0);
  if (!(target_N > floor_N))
    throw Unreachable("calibrate_alpha: target below photon number at alpha = 0");

  double hi = 1.0;
  int guard = 0;
  while (N_of(hi) < target_N) {
    hi *= 2.0;
    if (++guard > 60)
      throw CalibrationFailed("calibrate_alpha: bracket expansion failed");
  }
  double prev = floor_N;
  for (int i = 1; i <= 16; ++i) {
    const double cur = N_of(hi * double(i) / 16.0);
    if (cur < prev - 1e-12 * std::max(1.0, std::abs(prev)))
      throw CalibrationFailed("calibrate_alpha: N(alpha) not monotone on bracket");
    prev = cur;
  }

  double lo = 0.0;
  double mid = 0.5 * hi;
  for (int i = 0; i < 300; ++i) {
    mid = 0.5 * (lo + hi);
    const double val = N_of(mid);
    if (std::abs(val - target_N) <= 0.5 * kTol) return mid;
    (val < target_N ? lo : hi) = mid;
  }
  if (std::abs(N_of(mid) - target_N) <= kTol) return mid;
  throw CalibrationFailed("calibrate_alpha: bisection did not converge");
}

}  // namespace su11

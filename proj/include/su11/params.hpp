#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "su11/errors.hpp"

namespace su11 {

/// All physical parameters of one interferometer configuration.
///
/// The two OPAs share the gain factor g (ξ1 = g e^{iθ1}, ξ2 = g e^{iθ2});
/// θ2 − θ1 = π is enforced at construction. T is the internal transmittance
/// of the fictitious beam splitters acting on both modes between the first
/// OPA and the subtraction; eta is the separate transmittance of the loss
/// acting on mode a in the Fisher-information analysis.
struct ModelParams {
  double g = 1.0;
  double theta1 = 0.0;
  double theta2 = std::numbers::pi;
  std::complex<double> alpha{1.0, 0.0};
  unsigned m = 0;
  unsigned n = 0;
  double T = 1.0;
  double eta = 1.0;
  double phi = 0.0;

  static constexpr unsigned kMaxSubtractionOrder = 5;

  ModelParams() = default;

  ModelParams(double g_, double theta1_, std::complex<double> alpha_,
              unsigned m_, unsigned n_, double T_, double eta_, double phi_)
      : g(g_),
        theta1(theta1_),
        theta2(theta1_ + std::numbers::pi),
        alpha(alpha_),
        m(m_),
        n(n_),
        T(T_),
        eta(eta_),
        phi(phi_) {
    validate();
  }

  void validate() const {
    if (!(g >= 0.0)) throw InvalidArgument("g must be >= 0");
    if (!(T > 0.0 && T <= 1.0)) throw InvalidArgument("T must be in (0, 1]");
    if (!(eta > 0.0 && eta <= 1.0))
      throw InvalidArgument("eta must be in (0, 1]");
    if (m > kMaxSubtractionOrder || n > kMaxSubtractionOrder)
      throw InvalidArgument("subtraction order above supported maximum (5)");
    if (std::abs((theta2 - theta1) - std::numbers::pi) > 1e-12)
      throw InvalidArgument("theta2 - theta1 must equal pi");
  }

  ModelParams with_phi(double new_phi) const {
    ModelParams p = *this;
    p.phi = new_phi;
    return p;
  }
  ModelParams with_alpha(std::complex<double> a) const {
    ModelParams p = *this;
    p.alpha = a;
    return p;
  }
  ModelParams with_T(double t) const {
    ModelParams p = *this;
    p.T = t;
    p.validate();
    return p;
  }
  ModelParams with_scheme(unsigned mm, unsigned nn) const {
    ModelParams p = *this;
    p.m = mm;
    p.n = nn;
    p.validate();
    return p;
  }
};

}  // namespace su11

#pragma once

#include <cmath>

#include "su11/errors.hpp"
#include "su11/model.hpp"
#include "su11/params.hpp"

namespace su11 {

/// Quantum Fisher information together with the Cramér-Rao bound it
/// implies for v repeated measurements.
struct FisherResult {
  double f = 0.0;
  double qcrb = 0.0;
  unsigned v = 1;
};

/// F = 4 [A² D_{m+2,n,m+2,n} + A² D_{m+1,n,m+1,n} − (A² D_{m+1,n,m+1,n})²]
/// = 4 Var(n_a) of the normalized subtracted state. Stated for the ideal
/// interferometer only; T ≠ 1 is rejected.
inline double qfi_ideal(const ModelParams& p) {
  if (p.T != 1.0)
    throw InvalidArgument("qfi_ideal: defined at T = 1 only");
  return MomentTable(p).fisher_information();
}

inline double qcrb(double f, unsigned v = 1) {
  if (!(f > 0.0)) throw InvalidArgument("qcrb: F must be positive");
  if (v == 0) throw InvalidArgument("qcrb: v must be positive");
  return 1.0 / std::sqrt(double(v) * f);
}

inline FisherResult qcrb_result(double f, unsigned v = 1) {
  return {f, qcrb(f, v), v};
}

/// F_L = 4 F η <n_a> / ((1−η) F + 4 η <n_a>), with both F and <n_a>
/// evaluated in the ideal (T = 1) subtracted state; the mode-a loss enters
/// only through η.
inline double qfi_lossy(const ModelParams& p) {
  if (p.T != 1.0)
    throw InvalidArgument("qfi_lossy: the internal transmittance must be 1; loss enters via eta");
  const MomentTable t(p);
  const double F = t.fisher_information();
  if (p.eta == 1.0) return F;
  const double na = t.mean_na();
  return 4.0 * F * p.eta * na / ((1.0 - p.eta) * F + 4.0 * p.eta * na);
}

inline double qcrb_lossy(const ModelParams& p, unsigned v = 1) {
  return qcrb(qfi_lossy(p), v);
}

}  // namespace su11

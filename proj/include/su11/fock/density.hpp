#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "su11/errors.hpp"
#include "su11/fock/basis.hpp"
#include "su11/fock/ops.hpp"
#include "su11/fock/state.hpp"

namespace su11::fock {

constexpr double kTraceDriftTol = 1e-9;
constexpr double kHermitianTol = 1e-10;

/// Dense two-mode density matrix over the same flat (n_a, n_b) indexing as
/// TwoModeState. Kept deliberately small (product cap 4096) since it is a
/// cross-check representation, not the main evaluation path.
class DensityMatrix {
 public:
  explicit DensityMatrix(const FockBasisSpec& basis)
      : basis_(basis),
        rho_(Eigen::MatrixXcd::Zero(basis.size(), basis.size())) {
    if (basis.size() > FockBasisSpec::kDensityProductCap)
      throw InvalidArgument("DensityMatrix: product dimension above 4096");
  }

  static DensityMatrix from_pure(const TwoModeState& s) {
    DensityMatrix rho(s.basis());
    rho.rho_.noalias() = s.amplitudes() * s.amplitudes().adjoint();
    return rho;
  }

  const FockBasisSpec& basis() const { return basis_; }
  Eigen::MatrixXcd& matrix() { return rho_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  Complex at(std::size_t na, std::size_t nb, std::size_t ma,
             std::size_t mb) const {
    return rho_(basis_.index(na, nb), basis_.index(ma, mb));
  }

  double trace() const { return rho_.trace().real(); }

  double hermiticity_defect() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  }

  /// Smallest eigenvalue; a meaningful positive-semidefiniteness probe only
  /// on the small dimensions this type is restricted to.
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (rho_ + rho_.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  /// Tr(rho diag(f(n_a, n_b))) for a diagonal-observable functor.
  template <class F>
  double expect_diag(F&& f) const {
    double acc = 0.0;
    for (std::size_t na = 0; na < basis_.dim_a; ++na)
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        acc += rho_(basis_.index(na, nb), basis_.index(na, nb)).real() *
               f(na, nb);
    return acc;
  }

  /// Tr(rho a): couples |n_a> to |n_a - 1| at fixed n_b.
  Complex expect_a() const {
    Complex acc{0.0, 0.0};
    for (std::size_t na = 1; na < basis_.dim_a; ++na)
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        acc += std::sqrt(double(na)) *
               rho_(basis_.index(na, nb), basis_.index(na - 1, nb));
    return acc;
  }

  Complex expect_a2() const {
    Complex acc{0.0, 0.0};
    for (std::size_t na = 2; na < basis_.dim_a; ++na)
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        acc += std::sqrt(double(na) * double(na - 1)) *
               rho_(basis_.index(na, nb), basis_.index(na - 2, nb));
    return acc;
  }

  double expect_na() const {
    return expect_diag([](std::size_t na, std::size_t) { return double(na); });
  }
  double expect_nb() const {
    return expect_diag([](std::size_t, std::size_t nb) { return double(nb); });
  }

 private:
  FockBasisSpec basis_;
  Eigen::MatrixXcd rho_;
};

/// Transmittance-T photon loss on one mode as an explicit Kraus sum
/// rho -> sum_l A_l rho A_l^dagger. On the truncated space the Kraus set is
/// complete, so the trace is preserved; drift beyond 1e-9 means the
/// representation broke down.
enum class Mode { a, b };

inline DensityMatrix apply_loss_channel(const DensityMatrix& rho, Mode mode,
                                        double T) {
  if (!(T > 0.0) || T > 1.0)
    throw InvalidArgument("apply_loss_channel: T must lie in (0, 1]");
  const FockBasisSpec& b = rho.basis();
  if (T == 1.0) return rho;

  const std::size_t dim = (mode == Mode::a) ? b.dim_a : b.dim_b;
  const double tr_in = rho.trace();
  DensityMatrix out(b);

  Eigen::MatrixXcd lowered(b.size(), b.size());
  for (unsigned l = 0; l < dim; ++l) {
    lowered.setZero();
    // lowered = A_l rho: row (n, .) picks up K(l, n) * rho(n + l, .).
    for (std::size_t na = 0; na < b.dim_a; ++na)
      for (std::size_t nb = 0; nb < b.dim_b; ++nb) {
        const std::size_t n = (mode == Mode::a) ? na : nb;
        if (n + l >= dim) continue;
        const double k = kraus_coefficient(l, n, T);
        const std::size_t src = (mode == Mode::a) ? b.index(na + l, nb)
                                                  : b.index(na, nb + l);
        lowered.row(b.index(na, nb)) = k * rho.matrix().row(src);
      }
    // out += (A_l rho) A_l^dagger: column counterpart of the same map.
    for (std::size_t na = 0; na < b.dim_a; ++na)
      for (std::size_t nb = 0; nb < b.dim_b; ++nb) {
        const std::size_t n = (mode == Mode::a) ? na : nb;
        if (n + l >= dim) continue;
        const double k = kraus_coefficient(l, n, T);
        const std::size_t src = (mode == Mode::a) ? b.index(na + l, nb)
                                                  : b.index(na, nb + l);
        out.matrix().col(b.index(na, nb)) += k * lowered.col(src);
      }
  }

  if (std::abs(out.trace() - tr_in) > kTraceDriftTol)
    throw TruncationError("apply_loss_channel: trace drift above 1e-9");
  return out;
}

inline DensityMatrix apply_phase_shift(const DensityMatrix& rho, double phi) {
  const FockBasisSpec& b = rho.basis();
  Eigen::VectorXcd mask(b.size());
  for (std::size_t na = 0; na < b.dim_a; ++na)
    for (std::size_t nb = 0; nb < b.dim_b; ++nb)
      mask[b.index(na, nb)] = std::polar(1.0, phi * double(na));
  DensityMatrix out(b);
  out.matrix() = mask.asDiagonal() * rho.matrix() * mask.conjugate().asDiagonal();
  return out;
}

/// a^m b^n conditioning on the density matrix; returns the renormalized
/// state and the success weight Tr(A rho A^dagger).
inline std::pair<DensityMatrix, double> apply_subtraction(
    const DensityMatrix& rho, unsigned m, unsigned n) {
  const FockBasisSpec& b = rho.basis();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(b.size());
  for (std::size_t na = 0; na + m < b.dim_a; ++na) {
    double fa = 1.0;
    for (unsigned j = 1; j <= m; ++j) fa *= double(na + j);
    for (std::size_t nb = 0; nb + n < b.dim_b; ++nb) {
      double fb = 1.0;
      for (unsigned j = 1; j <= n; ++j) fb *= double(nb + j);
      f[b.index(na, nb)] = std::sqrt(fa * fb);
    }
  }
  DensityMatrix out(b);
  for (std::size_t r = 0; r < b.size(); ++r) {
    const std::size_t ra = r / b.dim_b, rb = r % b.dim_b;
    if (ra + m >= b.dim_a || rb + n >= b.dim_b || f[r] == 0.0) continue;
    const std::size_t rsrc = b.index(ra + m, rb + n);
    for (std::size_t c = 0; c < b.size(); ++c) {
      const std::size_t ca = c / b.dim_b, cb = c % b.dim_b;
      if (ca + m >= b.dim_a || cb + n >= b.dim_b || f[c] == 0.0) continue;
      out.matrix()(r, c) =
          f[r] * f[c] * rho.matrix()(rsrc, b.index(ca + m, cb + n));
    }
  }
  const double w = out.trace();
  if (w < 1e-300)
    throw DegenerateState("apply_subtraction: zero success probability");
  out.matrix() /= w;
  return {std::move(out), w};
}

inline DensityMatrix apply_squeeze(const SqueezeOperator& op,
                                   const DensityMatrix& rho,
                                   bool adjoint = false) {
  DensityMatrix out(rho.basis());
  Eigen::MatrixXcd half;
  op.apply_batch(rho.matrix(), half, adjoint);
  Eigen::MatrixXcd halft = half.adjoint();
  Eigen::MatrixXcd full;
  op.apply_batch(halft, full, adjoint);
  out.matrix() = full.adjoint();
  return out;
}

/// Homodyne quadrature X = a + a^dagger moments of a normalized state.
inline double mean_quadrature(const TwoModeState& s) {
  return 2.0 * s.expect_a().real();
}
inline double mean_quadrature_sq(const TwoModeState& s) {
  return 2.0 * s.expect_a2().real() + 2.0 * s.expect_na() + s.norm_sq();
}
inline double mean_quadrature(const DensityMatrix& rho) {
  return 2.0 * rho.expect_a().real();
}
inline double mean_quadrature_sq(const DensityMatrix& rho) {
  return 2.0 * rho.expect_a2().real() + 2.0 * rho.expect_na() + rho.trace();
}

}  // namespace su11::fock

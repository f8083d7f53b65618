#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "su11/fock/basis.hpp"

namespace su11::fock {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

/// Two-mode pure state on a truncated Fock basis. May be sub-normalized
/// mid-pipeline (e.g. an unrenormalized subtraction outcome); norms above
/// 1 + 1e-9 indicate a bug upstream.
class TwoModeState {
 public:
  explicit TwoModeState(const FockBasisSpec& basis)
      : basis_(basis), amp_(Vector::Zero(basis.size())) {}

  const FockBasisSpec& basis() const { return basis_; }
  Vector& amplitudes() { return amp_; }
  const Vector& amplitudes() const { return amp_; }

  Complex& at(std::size_t na, std::size_t nb) {
    return amp_[basis_.index(na, nb)];
  }
  Complex at(std::size_t na, std::size_t nb) const {
    return amp_[basis_.index(na, nb)];
  }

  double norm_sq() const { return amp_.squaredNorm(); }

  void renormalize() {
    const double n = std::sqrt(norm_sq());
    if (n > 0.0) amp_ /= n;
  }

  /// Probability mass in the top two Fock layers of either mode.
  double top_tail() const {
    const std::size_t Da = basis_.dim_a, Db = basis_.dim_b;
    double t = 0.0;
    for (std::size_t na = Da - 2; na < Da; ++na)
      for (std::size_t nb = 0; nb < Db; ++nb)
        t += std::norm(at(na, nb));
    for (std::size_t na = 0; na + 2 < Da; ++na)
      for (std::size_t nb = Db - 2; nb < Db; ++nb)
        t += std::norm(at(na, nb));
    return t;
  }

  Complex expect_a() const {
    Complex s{0.0, 0.0};
    for (std::size_t na = 1; na < basis_.dim_a; ++na) {
      const double f = std::sqrt(double(na));
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        s += std::conj(at(na - 1, nb)) * f * at(na, nb);
    }
    return s;
  }

  Complex expect_a2() const {
    Complex s{0.0, 0.0};
    for (std::size_t na = 2; na < basis_.dim_a; ++na) {
      const double f = std::sqrt(double(na) * double(na - 1));
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        s += std::conj(at(na - 2, nb)) * f * at(na, nb);
    }
    return s;
  }

  double expect_na() const {
    double s = 0.0;
    for (std::size_t na = 0; na < basis_.dim_a; ++na)
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        s += double(na) * std::norm(at(na, nb));
    return s;
  }

  double expect_na2() const {
    double s = 0.0;
    for (std::size_t na = 0; na < basis_.dim_a; ++na)
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        s += double(na) * double(na) * std::norm(at(na, nb));
    return s;
  }

  double expect_nb() const {
    double s = 0.0;
    for (std::size_t na = 0; na < basis_.dim_a; ++na)
      for (std::size_t nb = 0; nb < basis_.dim_b; ++nb)
        s += double(nb) * std::norm(at(na, nb));
    return s;
  }

 private:
  FockBasisSpec basis_;
  Vector amp_;
};

}  // namespace su11::fock

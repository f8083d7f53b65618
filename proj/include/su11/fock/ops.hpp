#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "su11/errors.hpp"
#include "su11/fock/basis.hpp"
#include "su11/fock/state.hpp"

namespace su11::fock {

constexpr double kCoherentTailTol = 1e-12;
constexpr double kStageTailTol = 1e-10;

/// Coherent state alpha in mode a, vacuum in mode b.
inline TwoModeState prepare_input(Complex alpha, const FockBasisSpec& basis) {
  TwoModeState s(basis);
  Complex amp = std::exp(-0.5 * std::norm(alpha));
  s.at(0, 0) = amp;
  for (std::size_t na = 1; na < basis.dim_a; ++na) {
    amp *= alpha / std::sqrt(double(na));
    s.at(na, 0) = amp;
  }
  const double tail = 1.0 - s.norm_sq();
  if (tail >= kCoherentTailTol)
    throw TruncationError("prepare_input: coherent tail mass above 1e-12");
  return s;
}

inline TwoModeState apply_phase_shift(const TwoModeState& s, double phi) {
  TwoModeState out = s;
  for (std::size_t na = 0; na < s.basis().dim_a; ++na) {
    const Complex f = std::polar(1.0, phi * double(na));
    for (std::size_t nb = 0; nb < s.basis().dim_b; ++nb) out.at(na, nb) *= f;
  }
  return out;
}

/// a^m b^n followed by renormalization; returns the renormalized state and
/// the squared norm before renormalization (the success weight).
inline std::pair<TwoModeState, double> apply_subtraction(const TwoModeState& s,
                                                         unsigned m,
                                                         unsigned n) {
  const FockBasisSpec& b = s.basis();
  TwoModeState out(b);
  for (std::size_t na = 0; na + m < b.dim_a; ++na) {
    double fa = 1.0;
    for (unsigned j = 1; j <= m; ++j) fa *= double(na + j);
    const double sfa = std::sqrt(fa);
    for (std::size_t nb = 0; nb + n < b.dim_b; ++nb) {
      double fb = 1.0;
      for (unsigned j = 1; j <= n; ++j) fb *= double(nb + j);
      out.at(na, nb) = sfa * std::sqrt(fb) * s.at(na + m, nb + n);
    }
  }
  const double w = out.norm_sq();
  if (w < 1e-300)
    throw DegenerateState("apply_subtraction: zero success probability");
  out.amplitudes() /= std::sqrt(w);
  return {std::move(out), w};
}

/// Two-mode squeeze exp(ξ* ab − ξ a†b†) on the truncated space. The
/// generator conserves n_a − n_b, so it is block-tridiagonal over the
/// diagonals q = n_a − n_b; each block is exponentiated exactly through a
/// Hermitian eigendecomposition, which keeps the operator unitary to
/// machine precision at any dimension.
class SqueezeOperator {
 public:
  SqueezeOperator(double g, double theta, const FockBasisSpec& basis)
      : basis_(basis) {
    const Complex xi = std::polar(g, theta);
    const std::ptrdiff_t Da = std::ptrdiff_t(basis.dim_a);
    const std::ptrdiff_t Db = std::ptrdiff_t(basis.dim_b);
    blocks_.reserve(std::size_t(Da + Db - 1));
    for (std::ptrdiff_t q = -(Db - 1); q < Da; ++q) {
      Block blk;
      blk.na0 = std::size_t(q >= 0 ? q : 0);
      blk.nb0 = std::size_t(q >= 0 ? 0 : -q);
      blk.len = std::size_t(std::min(Da - std::ptrdiff_t(blk.na0),
                                     Db - std::ptrdiff_t(blk.nb0)));
      Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(blk.len, blk.len);
      for (std::size_t k = 0; k + 1 < blk.len; ++k) {
        const double f =
            std::sqrt(double(blk.na0 + k + 1) * double(blk.nb0 + k + 1));
        H(k, k + 1) = Complex{0.0, 1.0} * std::conj(xi) * f;
        H(k + 1, k) = Complex{0.0, -1.0} * xi * f;
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
      const auto& V = es.eigenvectors();
      Eigen::VectorXcd ph(blk.len);
      for (std::size_t k = 0; k < blk.len; ++k)
        ph[k] = std::polar(1.0, -es.eigenvalues()[k]);
      blk.u = V * ph.asDiagonal() * V.adjoint();
      blocks_.push_back(std::move(blk));
    }
  }

  const FockBasisSpec& basis() const { return basis_; }

  /// adjoint = true applies the inverse squeeze (the opposite-phase OPA).
  TwoModeState apply(const TwoModeState& s, bool adjoint = false) const {
    TwoModeState out(basis_);
    Eigen::VectorXcd x, y;
    for (const Block& blk : blocks_) {
      x.resize(blk.len);
      for (std::size_t k = 0; k < blk.len; ++k)
        x[k] = s.at(blk.na0 + k, blk.nb0 + k);
      y = adjoint ? (blk.u.adjoint() * x).eval() : (blk.u * x).eval();
      for (std::size_t k = 0; k < blk.len; ++k)
        out.at(blk.na0 + k, blk.nb0 + k) = y[k];
    }
    return out;
  }

  /// Column-batched apply over a dense matrix of flattened states.
  void apply_batch(const Eigen::Ref<const Eigen::MatrixXcd>& in,
                   Eigen::MatrixXcd& out, bool adjoint = false) const {
    out.setZero(in.rows(), in.cols());
    const std::size_t Db = basis_.dim_b;
    Eigen::MatrixXcd x, y;
    for (const Block& blk : blocks_) {
      x.resize(blk.len, in.cols());
      for (std::size_t k = 0; k < blk.len; ++k)
        x.row(k) = in.row((blk.na0 + k) * Db + (blk.nb0 + k));
      if (adjoint)
        y.noalias() = blk.u.adjoint() * x;
      else
        y.noalias() = blk.u * x;
      for (std::size_t k = 0; k < blk.len; ++k)
        out.row((blk.na0 + k) * Db + (blk.nb0 + k)) = y.row(k);
    }
  }

  /// Batched apply in diagonal-major layout: row r holds the concatenated
  /// q = n_a − n_b diagonals in ascending-q order (entry k of diagonal q is
  /// Fock pair (na0+k, nb0+k)). Every block product then runs on contiguous
  /// rows, with no gather/scatter — this is the hot path of the trajectory
  /// oracle.
  void apply_diag_batch(const Eigen::Ref<const Eigen::MatrixXcd>& in,
                        Eigen::MatrixXcd& out, bool adjoint = false) const {
    out.resize(in.rows(), in.cols());
    std::size_t off = 0;
    for (const Block& blk : blocks_) {
      const auto x = in.middleRows(off, blk.len);
      if (adjoint)
        out.middleRows(off, blk.len).noalias() = blk.u.adjoint() * x;
      else
        out.middleRows(off, blk.len).noalias() = blk.u * x;
      off += blk.len;
    }
  }

 private:
  struct Block {
    std::size_t na0, nb0, len;
    Eigen::MatrixXcd u;
  };
  FockBasisSpec basis_;
  std::vector<Block> blocks_;
};

/// Shared squeeze operators keyed by (g, theta, dims); the opposite-phase
/// OPA (theta + pi) reuses the same entry through the adjoint.
class SqueezeCache {
 public:
  const SqueezeOperator& get(double g, double theta,
                             const FockBasisSpec& basis) {
    const Key key{g, theta, basis.dim_a, basis.dim_b};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, std::make_unique<SqueezeOperator>(g, theta, basis))
               .first;
    return *it->second;
  }

 private:
  struct Key {
    double g, theta;
    std::size_t da, db;
    friend bool operator<(const Key& x, const Key& y) {
      return std::tie(x.g, x.theta, x.da, x.db) <
             std::tie(y.g, y.theta, y.da, y.db);
    }
  };
  std::map<Key, std::unique_ptr<SqueezeOperator>> cache_;
};

/// Contract form of the squeeze: applies the operator and post-checks that
/// the output's top-two-layer mass stays below 1e-10 of its norm.
inline TwoModeState apply_two_mode_squeeze(const TwoModeState& s, double g,
                                           double theta,
                                           SqueezeCache* cache = nullptr) {
  SqueezeCache local;
  const SqueezeOperator& op =
      (cache ? *cache : local).get(g, theta, s.basis());
  TwoModeState out = op.apply(s);
  const double nrm = out.norm_sq();
  if (nrm > 0.0 && out.top_tail() >= kStageTailTol * nrm)
    throw TruncationError("apply_two_mode_squeeze: top-layer tail mass above 1e-10");
  return out;
}

/// Kraus amplitude of the transmittance-T loss channel taking |n_keep + l>
/// to |n_keep>; evaluated in log space to stay finite at high orders.
inline double kraus_coefficient(unsigned l, std::size_t n_keep, double T) {
  if (T >= 1.0) return l == 0 ? 1.0 : 0.0;
  const double logc = 0.5 * (double(l) * std::log1p(-T) +
                             std::lgamma(double(n_keep + l) + 1.0) -
                             std::lgamma(double(n_keep) + 1.0) -
                             std::lgamma(double(l) + 1.0)) +
                      0.5 * double(n_keep) * std::log(T);
  return std::exp(logc);
}

}  // namespace su11::fock

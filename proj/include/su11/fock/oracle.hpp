#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "su11/errors.hpp"
#include "su11/fock/basis.hpp"
#include "su11/fock/density.hpp"
#include "su11/fock/ops.hpp"
#include "su11/fock/state.hpp"
#include "su11/params.hpp"

namespace su11::fock {

/// Knobs for the truncated-space evaluation. The dimension ladder climbs by
/// half-doublings; a level is accepted only when its truncation tails are
/// clean and every reported quantity agrees with the previous evaluated
/// level to cert_tol (a two-level convergence certificate).
struct OracleOptions {
  std::vector<std::size_t> ladder{14, 20, 28, 40, 56, 80, 112, 160, 224};
  double stage_tail_tol = 1e-10;  // top-two-layer mass after each OPA
  double cert_tol = 1e-8;         // consecutive-level relative change
  double keep_tol = 1e-15;        // dropped loss-branch weight fraction
  std::size_t chunk = 96;         // loss branches batched per matrix apply
};

struct PhiQuantities {
  double x = 0.0;     // <X>
  double x2 = 0.0;    // <X^2>
  double dx = 0.0;    // d<X>/dphi, exact (phase generator insertion)
  double sens = 0.0;  // sqrt(<X^2> - <X>^2) / |d<X>/dphi|
};

struct TrajectoryLevelResult {
  std::vector<PhiQuantities> per_phi;  // sens filled in only on acceptance
  double mean_n = 0.0;                 // <n_a + n_b> after subtraction
  double total_weight = 0.0;           // subtraction success probability
  double tail1 = 0.0;                  // top-layer mass after the first OPA
  double tail2 = 0.0;                  // ensemble top-layer mass after the second
  bool tails_ok = false;
};

struct OracleQuadratureReport {
  std::vector<double> phis;
  std::vector<PhiQuantities> values;
  double mean_n = 0.0;
  double total_weight = 0.0;
  std::size_t level = 0;
  double certificate = 0.0;
  double tail1 = 0.0, tail2 = 0.0;
};

struct OracleQfiReport {
  double f = 0.0;        // quantum Fisher information
  double qcrb = 0.0;     // 1/sqrt(F), single shot
  double mean_na = 0.0;  // probe-mode mean photon number after subtraction
  double mean_n = 0.0;
  std::size_t level = 0;
  double certificate = 0.0;
  double tail1 = 0.0;
};

namespace detail {

inline double rel_change(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-8});
}

/// Kraus amplitudes K(l, u) of the one-mode loss channel, |u + l> -> |u>.
inline Eigen::MatrixXd kraus_table(std::size_t dim, double T) {
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t u = 0; u + l < dim; ++u)
      K(l, u) = kraus_coefficient(unsigned(l), u, T);
  return K;
}

/// Diagonal-major enumeration of the two-mode basis: entries grouped by
/// q = n_a - n_b in ascending order (the block order of the squeeze), entry k
/// of diagonal q being the Fock pair (na0 + k, nb0 + k). In this layout the
/// squeeze acts on contiguous row spans, and photon annihilation or loss maps
/// each diagonal onto another diagonal at a constant in-span offset, so every
/// bulk operation of the trajectory oracle touches contiguous memory.
struct DiagonalLayout {
  struct Span {
    std::size_t na0, nb0, off, len;
  };
  std::vector<Span> spans;
  Eigen::VectorXd na, nb;  // photon numbers by diagonal position

  explicit DiagonalLayout(const FockBasisSpec& b) {
    const std::ptrdiff_t Da = std::ptrdiff_t(b.dim_a);
    const std::ptrdiff_t Db = std::ptrdiff_t(b.dim_b);
    spans.reserve(std::size_t(Da + Db - 1));
    na.resize(std::ptrdiff_t(b.size()));
    nb.resize(std::ptrdiff_t(b.size()));
    std::size_t off = 0;
    for (std::ptrdiff_t q = -(Db - 1); q < Da; ++q) {
      Span s;
      s.na0 = std::size_t(q >= 0 ? q : 0);
      s.nb0 = std::size_t(q >= 0 ? 0 : -q);
      s.len = std::min(std::size_t(Da) - s.na0, std::size_t(Db) - s.nb0);
      s.off = off;
      for (std::size_t k = 0; k < s.len; ++k) {
        na[std::ptrdiff_t(off + k)] = double(s.na0 + k);
        nb[std::ptrdiff_t(off + k)] = double(s.nb0 + k);
      }
      off += s.len;
      spans.push_back(s);
    }
  }

  /// Span holding diagonal q; valid for -(dim_b - 1) <= q <= dim_a - 1.
  const Span& span_of(std::ptrdiff_t q, std::size_t dim_b) const {
    return spans[std::size_t(q + std::ptrdiff_t(dim_b) - 1)];
  }
};

}  // namespace detail

/// Evaluates the full state pipeline (coherent prep, OPA1, per-mode photon
/// loss, subtraction, phase, OPA2, homodyne moments) at one fixed truncation.
/// Loss is handled in operator-sum form: every Kraus branch (l_a, l_b) is an
/// unnormalized pure trajectory, and ensemble moments are weight sums over
/// the branches whose combined weight covers all but keep_tol of the total.
/// The phase derivative is exact: d/dphi inserts i n_a before the second OPA,
/// so each branch carries a companion column z = U2 (n_a P_phi chi) and
/// d<X>/dphi = -2 Im(<y|a|z> + <z|a|y>*).
inline TrajectoryLevelResult evaluate_trajectory_level(
    const ModelParams& p, const FockBasisSpec& basis,
    const std::vector<double>& phis, const OracleOptions& opts,
    SqueezeCache& cache) {
  using RowMat =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const std::size_t Da = basis.dim_a, Db = basis.dim_b, dim = basis.size();
  const unsigned m = p.m, n = p.n;

  TwoModeState prep = prepare_input(p.alpha, basis);
  const SqueezeOperator& sq = cache.get(p.g, p.theta1, basis);
  TwoModeState psi1 = sq.apply(prep);
  const double tail1 = psi1.top_tail();

  Eigen::Map<const RowMat> psi_map(psi1.amplitudes().data(), Da, Db);
  Eigen::MatrixXd P2 = psi_map.cwiseAbs2();

  // Branch weights W(l_a, l_b) in one shot: W = Ra P2 Rb^T where
  // Ra(l, i) = fall_m(i - l) K(l, i - l)^2 folds the subtraction moment
  // into the loss branch, and similarly for mode b.
  Eigen::MatrixXd K = detail::kraus_table(std::max(Da, Db), p.T);
  auto loss_moment_matrix = [&](unsigned order, std::size_t D) {
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(D, D);
    for (std::size_t l = 0; l < D; ++l)
      for (std::size_t i = l + order; i < D; ++i) {
        double fall = 1.0;
        for (unsigned j = 0; j < order; ++j) fall *= double(i - l - j);
        R(l, i) = fall * K(l, i - l) * K(l, i - l);
      }
    return R;
  };
  Eigen::MatrixXd Ra = loss_moment_matrix(m, Da);
  Eigen::MatrixXd Rb = loss_moment_matrix(n, Db);
  Eigen::MatrixXd W = Ra * P2 * Rb.transpose();

  const double total_w = W.sum();
  if (!(total_w >= 1e-300))
    throw DegenerateState("trajectory oracle: zero subtraction probability");

  struct Branch {
    double w;
    std::size_t la, lb;
  };
  std::vector<Branch> branches;
  branches.reserve(std::size_t(W.size()));
  for (std::size_t la = 0; la < Da; ++la)
    for (std::size_t lb = 0; lb < Db; ++lb)
      if (W(la, lb) > 0.0) branches.push_back({W(la, lb), la, lb});
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return a.w > b.w; });
  std::size_t n_keep = 0;
  double acc = 0.0;
  while (n_keep < branches.size() && acc < (1.0 - opts.keep_tol) * total_w)
    acc += branches[n_keep++].w;
  branches.resize(n_keep);

  // Subtraction ladder factors sqrt(fall_m(n + m)) shared by all branches.
  Eigen::VectorXd sfa(Da), sfb(Db);
  for (std::size_t na = 0; na < Da; ++na) {
    double f = 1.0;
    for (unsigned j = 1; j <= m; ++j) f *= double(na + j);
    sfa[na] = std::sqrt(f);
  }
  for (std::size_t nb = 0; nb < Db; ++nb) {
    double f = 1.0;
    for (unsigned j = 1; j <= n; ++j) f *= double(nb + j);
    sfb[nb] = std::sqrt(f);
  }

  // All bulk state algebra below runs in diagonal-major layout (states are
  // concatenations of the q = n_a - n_b diagonals), which keeps the squeeze
  // block products and every expectation pass on contiguous memory.
  const detail::DiagonalLayout dl(basis);
  Eigen::VectorXcd psi_d(dim);
  for (const auto& s : dl.spans)
    for (std::size_t k = 0; k < s.len; ++k)
      psi_d[std::ptrdiff_t(s.off + k)] = psi_map(s.na0 + k, s.nb0 + k);

  // Per-entry weights in diagonal order: total photon number, ladder factors
  // sqrt(n_a) and sqrt(n_a (n_a - 1)), and the truncation-edge indicator for
  // the top-two rows/columns of the Fock window.
  const Eigen::VectorXd nw = dl.na + dl.nb;
  const Eigen::VectorXcd wa = dl.na.cwiseSqrt().cast<Complex>();
  const Eigen::VectorXcd w2 = (dl.na.array() * (dl.na.array() - 1.0))
                                  .max(0.0)
                                  .sqrt()
                                  .matrix()
                                  .cast<Complex>();
  Eigen::VectorXd tail_w = Eigen::VectorXd::Zero(std::ptrdiff_t(dim));
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(dim); ++i)
    if (dl.na[i] >= double(Da - 2) || dl.nb[i] >= double(Db - 2))
      tail_w[i] = 1.0;

  // Per-entry masks: the phase factor e^{i phi n_a} and the photon number
  // n_a used by the derivative-companion column.
  Eigen::MatrixXcd masks(std::ptrdiff_t(dim),
                         std::ptrdiff_t(phis.size()));
  for (std::size_t t = 0; t < phis.size(); ++t)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(dim); ++i)
      masks(i, std::ptrdiff_t(t)) = std::polar(1.0, phis[t] * dl.na[i]);
  const Eigen::VectorXcd na_mask = dl.na.cast<Complex>();

  // <y| a^j |z> in diagonal layout: annihilation maps diagonal q onto q - j
  // at a constant in-span offset, so each span contributes one contiguous
  // weighted segment product. w holds the target-side ladder factors.
  auto ladder = [&](const Eigen::Ref<const Eigen::VectorXcd>& y,
                    const Eigen::Ref<const Eigen::VectorXcd>& z,
                    std::ptrdiff_t j, const Eigen::VectorXcd& w) {
    Complex acc{0.0, 0.0};
    for (const auto& s : dl.spans) {
      const std::ptrdiff_t k0 =
          std::max<std::ptrdiff_t>(0, j - std::ptrdiff_t(s.na0));
      const std::ptrdiff_t cnt = std::ptrdiff_t(s.len) - k0;
      if (cnt <= 0) continue;
      const auto& s2 = dl.span_of(
          std::ptrdiff_t(s.na0) - std::ptrdiff_t(s.nb0) - j, Db);
      const std::ptrdiff_t p0 =
          std::ptrdiff_t(s2.off) + std::ptrdiff_t(s.na0) + k0 - j -
          std::ptrdiff_t(s2.na0);
      const std::ptrdiff_t t0 = std::ptrdiff_t(s.off) + k0;
      acc += y.segment(p0, cnt)
                 .cwiseProduct(w.segment(t0, cnt))
                 .dot(z.segment(t0, cnt));
    }
    return acc;
  };

  std::vector<double> x_sum(phis.size(), 0.0), x2_sum(phis.size(), 0.0),
      dx_sum(phis.size(), 0.0), tail2_sum(phis.size(), 0.0);
  double n_sum = 0.0;

  const std::size_t B = std::max<std::size_t>(1, opts.chunk);
  Eigen::MatrixXcd raw(dim, B), work(dim, 2 * B), out;
  Eigen::VectorXd fa(Da), fb(Db), a2(dim);
  for (std::size_t start = 0; start < branches.size(); start += B) {
    const std::size_t nc = std::min(B, branches.size() - start);
    raw.leftCols(nc).setZero();
    for (std::size_t c = 0; c < nc; ++c) {
      const Branch& br = branches[start + c];
      if (br.la + m >= Da || br.lb + n >= Db) continue;
      const std::ptrdiff_t Na = std::ptrdiff_t(Da - m - br.la);
      const std::ptrdiff_t Nb = std::ptrdiff_t(Db - n - br.lb);
      for (std::ptrdiff_t na = 0; na < Na; ++na)
        fa[na] = sfa[std::ptrdiff_t(na)] * K(br.la, std::size_t(na) + m);
      for (std::ptrdiff_t nb = 0; nb < Nb; ++nb)
        fb[nb] = sfb[std::ptrdiff_t(nb)] * K(br.lb, std::size_t(nb) + n);
      const std::ptrdiff_t da = std::ptrdiff_t(br.la + m);
      const std::ptrdiff_t db = std::ptrdiff_t(br.lb + n);
      Complex* dst = raw.col(std::ptrdiff_t(c)).data();
      for (const auto& s : dl.spans) {
        const std::ptrdiff_t lim =
            std::min({std::ptrdiff_t(s.len), Na - std::ptrdiff_t(s.na0),
                      Nb - std::ptrdiff_t(s.nb0)});
        if (lim <= 0) continue;
        const auto& s2 = dl.span_of(
            std::ptrdiff_t(s.na0) - std::ptrdiff_t(s.nb0) + da - db, Db);
        const Complex* src = psi_d.data() + s2.off +
                             std::size_t(std::ptrdiff_t(s.na0) + da -
                                         std::ptrdiff_t(s2.na0));
        const double* pa = fa.data() + s.na0;
        const double* pb = fb.data() + s.nb0;
        Complex* out_p = dst + s.off;
        for (std::ptrdiff_t k = 0; k < lim; ++k)
          out_p[k] = pa[k] * pb[k] * src[k];
      }
      n_sum += raw.col(std::ptrdiff_t(c)).cwiseAbs2().dot(nw);
    }
    for (std::size_t t = 0; t < phis.size(); ++t) {
      work.leftCols(nc) =
          raw.leftCols(nc).array().colwise() * masks.col(t).array();
      work.middleCols(nc, nc) =
          work.leftCols(nc).array().colwise() * na_mask.array();
      sq.apply_diag_batch(work.leftCols(2 * nc), out, /*adjoint=*/true);
      for (std::size_t c = 0; c < nc; ++c) {
        auto y = out.col(c);
        auto z = out.col(nc + c);
        x_sum[t] += 2.0 * ladder(y, y, 1, wa).real();
        const Complex yaz = ladder(y, z, 1, wa);
        const Complex zay = ladder(z, y, 1, wa);
        dx_sum[t] += -2.0 * (yaz + std::conj(zay)).imag();
        a2 = y.cwiseAbs2();
        const double nrm = a2.sum();
        const double n_acc = a2.dot(dl.na);
        x2_sum[t] += 2.0 * ladder(y, y, 2, w2).real() + 2.0 * n_acc + nrm;
        tail2_sum[t] += a2.dot(tail_w);
      }
    }
  }

  TrajectoryLevelResult res;
  res.total_weight = total_w;
  res.mean_n = n_sum / total_w;
  res.tail1 = tail1;
  res.tail2 = 0.0;
  res.per_phi.resize(phis.size());
  for (std::size_t t = 0; t < phis.size(); ++t) {
    PhiQuantities& q = res.per_phi[t];
    q.x = x_sum[t] / total_w;
    q.x2 = x2_sum[t] / total_w;
    q.dx = dx_sum[t] / total_w;
    res.tail2 = std::max(res.tail2, tail2_sum[t] / total_w);
  }
  res.tails_ok =
      tail1 < opts.stage_tail_tol && res.tail2 < opts.stage_tail_tol;
  return res;
}

namespace detail {

/// Strict finalization applied only to the accepted ladder level: mirrors
/// the closed-form error contract for degenerate variance or derivative.
inline void finalize_sensitivity(PhiQuantities& q) {
  double var = q.x2 - q.x * q.x;
  if (var < 0.0) {
    const double scale = std::max(1.0, std::abs(q.x2));
    if (var >= -1e-9 * scale)
      var = 0.0;
    else
      throw NumericalInconsistency(
          "oracle: quadrature variance negative beyond tolerance");
  }
  if (std::abs(q.dx) < 1e-12)
    throw SensitivityUndefined(
        "oracle: quadrature signal slope vanishes at requested phase");
  q.sens = std::sqrt(var) / std::abs(q.dx);
}

}  // namespace detail

/// Adaptive-truncation quadrature oracle over a list of phase values.
/// Climbs the dimension ladder until tails are clean and all quantities are
/// stable between consecutive levels; reports the accepted level and the
/// certificate (the worst relative change at acceptance).
inline OracleQuadratureReport oracle_quadrature_curve(
    const ModelParams& p, const std::vector<double>& phis,
    const OracleOptions& opts = {}, SqueezeCache* cache = nullptr) {
  p.validate();
  if (phis.empty())
    throw InvalidArgument("oracle_quadrature_curve: empty phase list");
  SqueezeCache local;
  SqueezeCache& c = cache ? *cache : local;

  std::optional<TrajectoryLevelResult> prev;
  for (std::size_t L : opts.ladder) {
    TrajectoryLevelResult cur;
    try {
      cur = evaluate_trajectory_level(p, FockBasisSpec{L, L}, phis, opts, c);
    } catch (const TruncationError&) {
      prev.reset();
      continue;
    }
    if (prev) {
      double cert = detail::rel_change(cur.mean_n, prev->mean_n);
      for (std::size_t t = 0; t < phis.size(); ++t) {
        cert = std::max(
            cert, detail::rel_change(cur.per_phi[t].x, prev->per_phi[t].x));
        cert = std::max(
            cert, detail::rel_change(cur.per_phi[t].x2, prev->per_phi[t].x2));
        cert = std::max(
            cert, detail::rel_change(cur.per_phi[t].dx, prev->per_phi[t].dx));
      }
      if (cur.tails_ok && cert < opts.cert_tol) {
        OracleQuadratureReport rep;
        rep.phis = phis;
        rep.values = cur.per_phi;
        for (PhiQuantities& q : rep.values) detail::finalize_sensitivity(q);
        rep.mean_n = cur.mean_n;
        rep.total_weight = cur.total_weight;
        rep.level = L;
        rep.certificate = cert;
        rep.tail1 = cur.tail1;
        rep.tail2 = cur.tail2;
        return rep;
      }
    }
    prev = std::move(cur);
  }
  throw TruncationError(
      "oracle_quadrature_curve: dimension ladder exhausted without a "
      "convergence certificate");
}

inline double oracle_mean_x(const ModelParams& p, const OracleOptions& opts = {},
                            SqueezeCache* cache = nullptr) {
  return oracle_quadrature_curve(p, {p.phi}, opts, cache).values[0].x;
}
inline double oracle_mean_x2(const ModelParams& p,
                             const OracleOptions& opts = {},
                             SqueezeCache* cache = nullptr) {
  return oracle_quadrature_curve(p, {p.phi}, opts, cache).values[0].x2;
}
inline double oracle_dmean_x_dphi(const ModelParams& p,
                                  const OracleOptions& opts = {},
                                  SqueezeCache* cache = nullptr) {
  return oracle_quadrature_curve(p, {p.phi}, opts, cache).values[0].dx;
}
inline double oracle_phase_sensitivity(const ModelParams& p,
                                       const OracleOptions& opts = {},
                                       SqueezeCache* cache = nullptr) {
  return oracle_quadrature_curve(p, {p.phi}, opts, cache).values[0].sens;
}
inline double oracle_mean_photon(const ModelParams& p,
                                 const OracleOptions& opts = {},
                                 SqueezeCache* cache = nullptr) {
  return oracle_quadrature_curve(p, {p.phi}, opts, cache).mean_n;
}

namespace detail {

struct QfiLevelResult {
  double f = 0.0, na = 0.0, n = 0.0, tail1 = 0.0;
  bool tails_ok = false;
};

inline QfiLevelResult evaluate_qfi_level(const ModelParams& p,
                                         const FockBasisSpec& basis,
                                         const OracleOptions& opts,
                                         SqueezeCache& cache) {
  TwoModeState prep = prepare_input(p.alpha, basis);
  const SqueezeOperator& sq = cache.get(p.g, p.theta1, basis);
  TwoModeState psi1 = sq.apply(prep);
  QfiLevelResult r;
  r.tail1 = psi1.top_tail();
  auto [chi, w] = apply_subtraction(psi1, p.m, p.n);
  const double na = chi.expect_na();
  const double na2 = chi.expect_na2();
  r.f = 4.0 * (na2 - na * na);
  r.na = na;
  r.n = na + chi.expect_nb();
  r.tails_ok = r.tail1 < opts.stage_tail_tol;
  return r;
}

}  // namespace detail

/// Lossless quantum Fisher information oracle: F = 4 Var(n_a) of the state
/// after the first OPA and subtraction. Only defined at T = 1, mirroring the
/// closed form's validity domain.
inline OracleQfiReport oracle_qfi(const ModelParams& p,
                                  const OracleOptions& opts = {},
                                  SqueezeCache* cache = nullptr) {
  p.validate();
  if (p.T != 1.0)
    throw InvalidArgument("oracle_qfi: defined only at unit transmittance");
  SqueezeCache local;
  SqueezeCache& c = cache ? *cache : local;

  std::optional<detail::QfiLevelResult> prev;
  for (std::size_t L : opts.ladder) {
    detail::QfiLevelResult cur;
    try {
      cur = detail::evaluate_qfi_level(p, FockBasisSpec{L, L}, opts, c);
    } catch (const TruncationError&) {
      prev.reset();
      continue;
    }
    if (prev) {
      double cert = detail::rel_change(cur.f, prev->f);
      cert = std::max(cert, detail::rel_change(cur.na, prev->na));
      cert = std::max(cert, detail::rel_change(cur.n, prev->n));
      if (cur.tails_ok && cert < opts.cert_tol) {
        OracleQfiReport rep;
        rep.f = cur.f;
        rep.qcrb = 1.0 / std::sqrt(cur.f);
        rep.mean_na = cur.na;
        rep.mean_n = cur.n;
        rep.level = L;
        rep.certificate = cert;
        rep.tail1 = cur.tail1;
        return rep;
      }
    }
    prev = cur;
  }
  throw TruncationError(
      "oracle_qfi: dimension ladder exhausted without a convergence "
      "certificate");
}

/// Small-dimension cross-check that evaluates the same pipeline with an
/// explicit density matrix and Kraus-sum loss channel (no trajectory
/// unraveling). Used to validate the trajectory evaluator branch bookkeeping.
struct DensityPipelineStats {
  double x = 0.0, x2 = 0.0, mean_n = 0.0, weight = 0.0;
};

inline DensityPipelineStats density_pipeline_stats(const ModelParams& p,
                                                   const FockBasisSpec& basis,
                                                   SqueezeCache* cache = nullptr) {
  p.validate();
  SqueezeCache local;
  SqueezeCache& c = cache ? *cache : local;
  TwoModeState prep = prepare_input(p.alpha, basis);
  const SqueezeOperator& sq = c.get(p.g, p.theta1, basis);
  TwoModeState psi1 = sq.apply(prep);
  DensityMatrix rho = DensityMatrix::from_pure(psi1);
  if (p.T < 1.0) {
    rho = apply_loss_channel(rho, Mode::a, p.T);
    rho = apply_loss_channel(rho, Mode::b, p.T);
  }
  auto [cond, w] = apply_subtraction(rho, p.m, p.n);
  DensityPipelineStats s;
  s.weight = w;
  s.mean_n = cond.expect_na() + cond.expect_nb();
  DensityMatrix shifted = apply_phase_shift(cond, p.phi);
  DensityMatrix after_opa2 = apply_squeeze(sq, shifted, /*adjoint=*/true);
  s.x = mean_quadrature(after_opa2);
  s.x2 = mean_quadrature_sq(after_opa2);
  return s;
}

}  // namespace su11::fock

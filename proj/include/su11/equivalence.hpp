#pragma once

#include <functional>
#include <string>
#include <vector>

#include "su11/fock/oracle.hpp"
#include "su11/model.hpp"
#include "su11/params.hpp"

namespace su11 {

/// Closed-form statistics bundle compared against the truncated-space
/// oracle. weight is the subtraction success probability (1 / A^2), the one
/// quantity both engines compute from completely different representations.
struct ClosedFormStats {
  double x = 0.0;
  double x2 = 0.0;
  double dx = 0.0;
  double sens = 0.0;
  double mean_n = 0.0;
  double weight = 0.0;
};

/// Injectable so tests can corrupt the closed form and prove the comparison
/// actually has teeth (a provider that lies must make the check fail).
using ClosedFormProvider = std::function<ClosedFormStats(const ModelParams&)>;

inline ClosedFormStats closed_form_stats(const ModelParams& p) {
  MomentTable t(p);
  ClosedFormStats s;
  s.x = t.mean_x(p.phi);
  s.x2 = t.mean_x2(p.phi);
  s.dx = t.dmean_x_dphi(p.phi);
  s.sens = t.phase_sensitivity(p.phi);
  s.mean_n = t.mean_photon();
  s.weight = 1.0 / t.a_squared();
  return s;
}

struct FieldDelta {
  std::string field;
  double closed = 0.0;
  double oracle = 0.0;
  double rel = 0.0;
};

struct PointComparison {
  ModelParams params;
  std::vector<FieldDelta> fields;
  double worst_rel = 0.0;
  std::string worst_field;
  std::size_t level = 0;       // accepted oracle truncation
  double certificate = 0.0;    // oracle convergence certificate
  bool pass(double tol) const { return worst_rel < tol; }
};

inline double relative_deviation(double a, double b) {
  return fock::detail::rel_change(a, b);
}

/// Compare closed form against the oracle at one parameter set for several
/// phase values at once; the oracle climbs its truncation ladder a single
/// time for the whole list.
inline std::vector<PointComparison> compare_points(
    const ModelParams& p, const std::vector<double>& phis,
    const ClosedFormProvider& provider = closed_form_stats,
    const fock::OracleOptions& opts = {}, fock::SqueezeCache* cache = nullptr) {
  const fock::OracleQuadratureReport rep =
      fock::oracle_quadrature_curve(p, phis, opts, cache);

  std::vector<PointComparison> result;
  result.reserve(phis.size());
  for (std::size_t t = 0; t < phis.size(); ++t) {
    const ModelParams pt = p.with_phi(phis[t]);
    const ClosedFormStats cf = provider(pt);
    const fock::PhiQuantities& q = rep.values[t];

    PointComparison out;
    out.params = pt;
    out.level = rep.level;
    out.certificate = rep.certificate;
    auto push = [&out](const std::string& name, double c, double o) {
      FieldDelta d{name, c, o, relative_deviation(c, o)};
      if (d.rel > out.worst_rel) {
        out.worst_rel = d.rel;
        out.worst_field = name;
      }
      out.fields.push_back(std::move(d));
    };
    push("mean_x", cf.x, q.x);
    push("mean_x2", cf.x2, q.x2);
    push("dmean_x_dphi", cf.dx, q.dx);
    push("sensitivity", cf.sens, q.sens);
    push("mean_n", cf.mean_n, rep.mean_n);
    push("weight", cf.weight, rep.total_weight);
    result.push_back(std::move(out));
  }
  return result;
}

/// Single-phase convenience wrapper (the phase comes from p.phi).
inline PointComparison compare_point(
    const ModelParams& p, const ClosedFormProvider& provider = closed_form_stats,
    const fock::OracleOptions& opts = {}, fock::SqueezeCache* cache = nullptr) {
  return compare_points(p, {p.phi}, provider, opts, cache)[0];
}

struct QfiComparison {
  ModelParams params;
  double f_closed = 0.0, f_oracle = 0.0;
  double na_closed = 0.0, na_oracle = 0.0;
  double worst_rel = 0.0;
  std::size_t level = 0;
  double certificate = 0.0;
  bool pass(double tol) const { return worst_rel < tol; }
};

inline QfiComparison compare_qfi_point(const ModelParams& p,
                                       const fock::OracleOptions& opts = {},
                                       fock::SqueezeCache* cache = nullptr) {
  MomentTable t(p);
  const fock::OracleQfiReport rep = fock::oracle_qfi(p, opts, cache);
  QfiComparison out;
  out.params = p;
  out.f_closed = t.fisher_information();
  out.f_oracle = rep.f;
  out.na_closed = t.mean_na();
  out.na_oracle = rep.mean_na;
  out.worst_rel = std::max(relative_deviation(out.f_closed, out.f_oracle),
                           relative_deviation(out.na_closed, out.na_oracle));
  out.level = rep.level;
  out.certificate = rep.certificate;
  return out;
}

}  // namespace su11

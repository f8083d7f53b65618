#pragma once

#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "su11/errors.hpp"
#include "su11/model.hpp"
#include "su11/params.hpp"
#include "su11/qfi.hpp"

namespace su11 {

enum class Quantity { sensitivity, qfi, qfi_lossy, qcrb, qcrb_lossy, mean_photon };
enum class SweepVar { phi, g, alpha, T, eta };

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::sensitivity: return "sensitivity";
    case Quantity::qfi: return "qfi";
    case Quantity::qfi_lossy: return "qfi_lossy";
    case Quantity::qcrb: return "qcrb";
    case Quantity::qcrb_lossy: return "qcrb_lossy";
    case Quantity::mean_photon: return "mean_photon";
  }
  return "?";
}

inline std::string to_string(SweepVar v) {
  switch (v) {
    case SweepVar::phi: return "phi";
    case SweepVar::g: return "g";
    case SweepVar::alpha: return "alpha";
    case SweepVar::T: return "T";
    case SweepVar::eta: return "eta";
  }
  return "?";
}

inline Quantity parse_quantity(const std::string& s) {
  for (Quantity q : {Quantity::sensitivity, Quantity::qfi, Quantity::qfi_lossy,
                     Quantity::qcrb, Quantity::qcrb_lossy, Quantity::mean_photon})
    if (to_string(q) == s) return q;
  throw InvalidArgument("unknown quantity: " + s);
}

inline SweepVar parse_sweep_var(const std::string& s) {
  for (SweepVar v : {SweepVar::phi, SweepVar::g, SweepVar::alpha, SweepVar::T,
                     SweepVar::eta})
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown sweep variable: " + s);
}

struct Range {
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 2;

  void validate() const {
    if (!(start < stop)) throw InvalidArgument("range: start must be < stop");
    if (steps < 2) throw InvalidArgument("range: needs at least 2 steps");
  }
  std::vector<double> values() const {
    validate();
    std::vector<double> v(steps);
    for (std::size_t k = 0; k < steps; ++k)
      v[k] = start + double(k) * (stop - start) / double(steps - 1);
    return v;
  }
};

struct SweepSpec {
  Quantity quantity = Quantity::sensitivity;
  SweepVar var = SweepVar::phi;
  Range range{};
  ModelParams fixed{};
  std::vector<std::pair<unsigned, unsigned>> schemes{{0u, 0u}};

  void validate() const {
    range.validate();
    if (schemes.empty()) throw InvalidArgument("sweep: no schemes given");
    for (auto [m, n] : schemes)
      if (m > ModelParams::kMaxSubtractionOrder ||
          n > ModelParams::kMaxSubtractionOrder)
        throw InvalidArgument("sweep: subtraction order above supported cap");
  }
};

/// One output row: a finite value xor an error marker.
struct CurvePoint {
  double sweep_value = 0.0;
  unsigned m = 0, n = 0;
  double value = 0.0;  // meaningful only when error_code is empty
  std::string error_code;
};

inline ModelParams with_sweep_value(ModelParams p, SweepVar var, double v) {
  switch (var) {
    case SweepVar::phi: p.phi = v; break;
    case SweepVar::g: p.g = v; break;
    case SweepVar::alpha: p.alpha = Complex{v, 0.0}; break;
    case SweepVar::T: p.T = v; break;
    case SweepVar::eta: p.eta = v; break;
  }
  return p;
}

inline double evaluate_quantity(const ModelParams& p, Quantity q) {
  switch (q) {
    case Quantity::sensitivity: return phase_sensitivity(p);
    case Quantity::qfi: return qfi_ideal(p);
    case Quantity::qfi_lossy: return qfi_lossy(p);
    case Quantity::qcrb: return qcrb(qfi_ideal(p));
    case Quantity::qcrb_lossy: return qcrb_lossy(p);
    case Quantity::mean_photon: return mean_photon_N(p);
  }
  throw InvalidArgument("evaluate_quantity: unknown quantity");
}

/// Runs the sweep; singular points become rows with an error code instead of
/// aborting. Schemes are evaluated as parallel tasks and merged back into
/// deterministic order (sweep value major, scheme minor). For phase sweeps
/// the per-scheme moment table is built once and reused across the curve.
inline std::vector<CurvePoint> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> values = spec.range.values();

  auto scheme_column = [&spec, &values](unsigned m, unsigned n) {
    std::vector<CurvePoint> col;
    col.reserve(values.size());
    auto emit = [&](double sv, auto&& fn) {
      CurvePoint pt;
      pt.sweep_value = sv;
      pt.m = m;
      pt.n = n;
      try {
        pt.value = fn();
      } catch (const Error& e) {
        pt.value = std::numeric_limits<double>::quiet_NaN();
        pt.error_code = error_code_name(e);
      }
      col.push_back(std::move(pt));
    };
    if (spec.var == SweepVar::phi && spec.quantity == Quantity::sensitivity) {
      std::optional<MomentTable> table;
      for (double v : values)
        emit(v, [&] {
          if (!table) table.emplace(spec.fixed.with_scheme(m, n));
          return table->phase_sensitivity(v);
        });
    } else {
      for (double v : values)
        emit(v, [&] {
          ModelParams p = with_sweep_value(spec.fixed.with_scheme(m, n),
                                           spec.var, v);
          return evaluate_quantity(p, spec.quantity);
        });
    }
    return col;
  };

  std::vector<std::future<std::vector<CurvePoint>>> tasks;
  tasks.reserve(spec.schemes.size());
  for (auto [m, n] : spec.schemes)
    tasks.push_back(std::async(std::launch::async, scheme_column, m, n));
  std::vector<std::vector<CurvePoint>> columns;
  columns.reserve(tasks.size());
  for (auto& t : tasks) columns.push_back(t.get());

  std::vector<CurvePoint> rows;
  rows.reserve(values.size() * columns.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    for (const auto& col : columns) rows.push_back(col[k]);
  return rows;
}

/// Fixed-width significant formatting shared by every CSV emitter so output
/// bytes are reproducible run to run.
inline std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const std::vector<CurvePoint>& rows) {
  os << "sweep_var,m,n,value,error_code\n";
  for (const CurvePoint& pt : rows) {
    os << format_value(pt.sweep_value) << ',' << pt.m << ',' << pt.n << ','
       << (pt.error_code.empty() ? format_value(pt.value) : "nan") << ','
       << pt.error_code << '\n';
  }
}

/// ---- SQL / Heisenberg-limit comparison at calibrated photon number ----

struct CompareSqlSpec {
  double target_n = 4.0;
  double T = 1.0;
  double g = 1.0;
  double theta1 = 0.0;
  Range phi_range{0.01, 1.5, 150};
  std::vector<std::pair<unsigned, unsigned>> schemes{{0u, 0u}};
};

struct CompareSqlRow {
  double phi = 0.0;
  unsigned m = 0, n = 0;
  double delta_phi = 0.0;  // nan when error_code set
  double sql = 0.0, hl = 0.0;
  double alpha = 0.0;  // calibrated amplitude; nan when unreachable
  std::string error_code;
};

/// For each scheme, calibrates alpha so the total mean photon number hits
/// target_n, then tabulates the homodyne sensitivity against the shot-noise
/// and Heisenberg limits for that photon number. Unreachable targets and
/// singular phases are carried as row-level markers, never aborting the
/// table.
inline std::vector<CompareSqlRow> compare_sql(const CompareSqlSpec& spec) {
  spec.phi_range.validate();
  if (spec.schemes.empty())
    throw InvalidArgument("compare_sql: no schemes given");
  const auto [sql, hl] = sql_hl(spec.target_n);
  const std::vector<double> phis = spec.phi_range.values();

  struct SchemeCal {
    unsigned m, n;
    std::optional<MomentTable> table;
    double alpha = std::numeric_limits<double>::quiet_NaN();
    std::string error_code;
  };
  std::vector<SchemeCal> cals;
  for (auto [m, n] : spec.schemes) {
    SchemeCal cal;
    cal.m = m;
    cal.n = n;
    ModelParams base;
    base.g = spec.g;
    base.theta1 = spec.theta1;
    base.theta2 = spec.theta1 + std::numbers::pi;
    base.T = spec.T;
    base.m = m;
    base.n = n;
    try {
      cal.alpha = calibrate_alpha(spec.target_n, base);
      cal.table.emplace(base.with_alpha(Complex{cal.alpha, 0.0}));
    } catch (const Error& e) {
      cal.error_code = error_code_name(e);
    }
    cals.push_back(std::move(cal));
  }

  std::vector<CompareSqlRow> rows;
  rows.reserve(phis.size() * cals.size());
  for (double phi : phis) {
    for (SchemeCal& cal : cals) {
      CompareSqlRow row;
      row.phi = phi;
      row.m = cal.m;
      row.n = cal.n;
      row.sql = sql;
      row.hl = hl;
      row.alpha = cal.alpha;
      if (!cal.error_code.empty()) {
        row.delta_phi = std::numeric_limits<double>::quiet_NaN();
        row.error_code = cal.error_code;
      } else {
        try {
          row.delta_phi = cal.table->phase_sensitivity(phi);
        } catch (const Error& e) {
          row.delta_phi = std::numeric_limits<double>::quiet_NaN();
          row.error_code = error_code_name(e);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<CompareSqlRow>& rows) {
  os << "phi,m,n,delta_phi,sql,hl,alpha,error_code\n";
  for (const CompareSqlRow& r : rows) {
    os << format_value(r.phi) << ',' << r.m << ',' << r.n << ','
       << format_value(r.delta_phi) << ',' << format_value(r.sql) << ','
       << format_value(r.hl) << ',' << format_value(r.alpha) << ','
       << r.error_code << '\n';
  }
}

}  // namespace su11

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <sstream>

#include "su11/presets.hpp"
#include "su11/sweep.hpp"

using su11::CurvePoint;
using su11::Quantity;
using su11::Range;
using su11::SweepSpec;
using su11::SweepVar;

TEST_CASE("quantity and variable names round-trip") {
  for (const char* name : {"sensitivity", "qfi", "qfi_lossy", "qcrb",
                           "qcrb_lossy", "mean_photon"}) {
    CHECK(su11::to_string(su11::parse_quantity(name)) == name);
  }
  for (const char* name : {"phi", "g", "alpha", "T", "eta"}) {
    CHECK(su11::to_string(su11::parse_sweep_var(name)) == name);
  }
  REQUIRE_THROWS_AS(su11::parse_quantity("entropy"), su11::InvalidArgument);
  REQUIRE_THROWS_AS(su11::parse_sweep_var("beta"), su11::InvalidArgument);
}

TEST_CASE("range validation and sampling") {
  REQUIRE_THROWS_AS((Range{1.0, 0.5, 10}).validate(), su11::InvalidArgument);
  REQUIRE_THROWS_AS((Range{0.0, 1.0, 1}).validate(), su11::InvalidArgument);
  const std::vector<double> v = Range{0.0, 1.0, 5}.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 1.0);
  CHECK(std::abs(v[2] - 0.5) < 1e-15);
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec;
  spec.schemes.clear();
  REQUIRE_THROWS_AS(spec.validate(), su11::InvalidArgument);
  spec = SweepSpec{};
  spec.schemes = {{6, 0}};
  REQUIRE_THROWS_AS(spec.validate(), su11::InvalidArgument);
}

TEST_CASE("sweep rows are value-major, scheme-minor and deterministic") {
  SweepSpec spec;
  spec.quantity = Quantity::sensitivity;
  spec.var = SweepVar::phi;
  spec.range = {0.3, 0.9, 3};
  spec.schemes = {{0, 0}, {1, 1}};
  const std::vector<CurvePoint> rows = su11::run_sweep(spec);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].sweep_value == 0.3);
  CHECK(rows[0].m == 0);
  CHECK(rows[1].sweep_value == 0.3);
  CHECK(rows[1].m == 1);
  CHECK(rows[4].m == 0);
  CHECK(std::abs(rows[5].sweep_value - 0.9) < 1e-15);
  for (const CurvePoint& r : rows) CHECK(r.error_code.empty());

  // Same spec twice gives byte-identical CSV.
  std::ostringstream a, b;
  su11::write_csv(a, rows);
  su11::write_csv(b, su11::run_sweep(spec));
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, a.str().find('\n')) ==
        "sweep_var,m,n,value,error_code");
}

TEST_CASE("a failing point becomes a nan row instead of aborting the sweep") {
  SweepSpec spec;
  spec.quantity = Quantity::sensitivity;
  spec.var = SweepVar::phi;
  spec.range = {0.0, 0.6, 2};  // phi = 0 has zero slope
  spec.schemes = {{0, 0}};
  const std::vector<CurvePoint> rows = su11::run_sweep(spec);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error_code == "SensitivityUndefined");
  CHECK(std::isnan(rows[0].value));
  CHECK(rows[1].error_code.empty());

  std::ostringstream os;
  su11::write_csv(os, rows);
  CHECK(os.str().find(",nan,SensitivityUndefined") != std::string::npos);
}

TEST_CASE("every quantity is sweepable") {
  for (Quantity q :
       {Quantity::sensitivity, Quantity::qfi, Quantity::qfi_lossy,
        Quantity::qcrb, Quantity::qcrb_lossy, Quantity::mean_photon}) {
    SweepSpec spec;
    spec.quantity = q;
    spec.var = (q == Quantity::qfi_lossy || q == Quantity::qcrb_lossy)
                   ? SweepVar::eta
                   : SweepVar::g;
    spec.range = (spec.var == SweepVar::eta) ? Range{0.5, 1.0, 3}
                                             : Range{0.4, 1.0, 3};
    spec.fixed.phi = 0.6;
    spec.schemes = {{1, 1}};
    const std::vector<CurvePoint> rows = su11::run_sweep(spec);
    REQUIRE(rows.size() == 3);
    for (const CurvePoint& r : rows) {
      CAPTURE(su11::to_string(q), r.sweep_value, r.error_code);
      CHECK(r.error_code.empty());
      CHECK(std::isfinite(r.value));
      CHECK(r.value > 0.0);
    }
  }
}

TEST_CASE("value formatting uses 12 significant digits and literal nan") {
  CHECK(su11::format_value(0.5) == "0.5");
  CHECK(su11::format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(su11::format_value(std::nan("")) == "nan");
}

TEST_CASE("preset table is well formed") {
  const std::vector<su11::PresetSpec> presets = su11::figure_presets();
  REQUIRE(!presets.empty());
  std::set<std::string> names;
  for (const su11::PresetSpec& p : presets) {
    CHECK(names.insert(p.name).second);
    CHECK(!p.description.empty());
    if (!p.is_compare_sql) REQUIRE_NOTHROW(p.sweep.validate());
  }
  REQUIRE(su11::find_preset(presets, "fig2a") != nullptr);
  CHECK(su11::find_preset(presets, "nope") == nullptr);

  const su11::PresetSpec* fig2a = su11::find_preset(presets, "fig2a");
  CHECK(fig2a->sweep.quantity == Quantity::sensitivity);
  CHECK(fig2a->sweep.var == SweepVar::phi);
  CHECK(fig2a->sweep.fixed.g == 1.0);
  CHECK(fig2a->sweep.fixed.T == 1.0);

  const su11::PresetSpec* fig6 = su11::find_preset(presets, "fig6");
  REQUIRE(fig6 != nullptr);
  CHECK(fig6->is_compare_sql);
}

TEST_CASE("benchmark comparison: no subtraction stays at the shot-noise limit") {
  su11::CompareSqlSpec spec;
  spec.g = 1.0;
  spec.T = 1.0;
  spec.phi_range = {0.05, 1.5, 30};
  spec.schemes = {{0, 0}};
  const auto rows = su11::compare_sql(spec);
  REQUIRE(rows.size() == 30);
  const double sql = 0.5;
  for (const auto& r : rows) {
    CHECK(r.error_code.empty());
    CHECK(r.sql == sql);
    CHECK(r.hl == 0.25);
    CHECK(r.delta_phi >= sql - 1e-9);
  }
  std::ostringstream os;
  su11::write_csv(os, rows);
  CHECK(os.str().substr(0, os.str().find('\n')) ==
        "phi,m,n,delta_phi,sql,hl,alpha,error_code");
}

TEST_CASE("benchmark comparison: paired subtraction can beat the shot-noise limit") {
  su11::CompareSqlSpec spec;
  spec.g = 0.5;
  spec.T = 0.5;
  spec.phi_range = {0.05, 1.5, 30};
  spec.schemes = {{1, 1}};
  const auto rows = su11::compare_sql(spec);
  bool beats = false;
  for (const auto& r : rows) {
    REQUIRE(r.error_code.empty());
    CHECK(std::abs(r.alpha - 1.6473078706037807) < 1e-8);
    if (r.delta_phi < 0.5) beats = true;
  }
  CHECK(beats);
}

TEST_CASE("benchmark comparison: unreachable targets produce error rows") {
  // At g = 1 the amplifier already emits more than 4 photons with (1,1)
  // subtraction, so the calibration target cannot be met.
  su11::CompareSqlSpec spec;
  spec.g = 1.0;
  spec.T = 1.0;
  spec.phi_range = {0.3, 0.9, 3};
  spec.schemes = {{1, 1}};
  const auto rows = su11::compare_sql(spec);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.error_code == "Unreachable");
    CHECK(std::isnan(r.delta_phi));
    CHECK(std::isnan(r.alpha));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "su11/qfi.hpp"

using su11::ModelParams;

namespace {

bool rel_ok(double got, double want, double tol) {
  return std::abs(got - want) <=
         tol * std::max({1.0, std::abs(got), std::abs(want)});
}

ModelParams mk(double g, double alpha, unsigned m, unsigned n, double eta) {
  ModelParams p;
  p.g = g;
  p.alpha = {alpha, 0.0};
  p.m = m;
  p.n = n;
  p.eta = eta;
  return p;
}

}  // namespace

TEST_CASE("ideal Fisher information matches frozen reference values") {
  CHECK(rel_ok(su11::qfi_ideal(mk(1.0, 1.0, 0, 0, 1.0)), 48.986740636192,
               1e-11));
  CHECK(rel_ok(su11::qfi_ideal(mk(1.0, 1.0, 1, 1, 1.0)), 95.6634943121012,
               1e-11));
  CHECK(rel_ok(su11::qfi_ideal(mk(1.0, 1.0, 2, 2, 1.0)), 134.647437402247,
               1e-11));
  CHECK(rel_ok(su11::qfi_ideal(mk(0.5, 1.0, 2, 0, 1.0)), 14.1189916277365,
               1e-11));
}

TEST_CASE("ideal Fisher information rejects internal loss") {
  ModelParams p = mk(1.0, 1.0, 1, 1, 1.0);
  p.T = 0.9;
  REQUIRE_THROWS_AS(su11::qfi_ideal(p), su11::InvalidArgument);
  REQUIRE_THROWS_AS(su11::qfi_lossy(p), su11::InvalidArgument);
}

TEST_CASE("Cramér-Rao bound and repeated-measurement scaling") {
  CHECK(su11::qcrb(16.0) == 0.25);
  CHECK(rel_ok(su11::qcrb(16.0, 4), 0.125, 1e-15));
  const su11::FisherResult r = su11::qcrb_result(25.0, 1);
  CHECK(r.f == 25.0);
  CHECK(r.qcrb == 0.2);
  CHECK(r.v == 1);
  REQUIRE_THROWS_AS(su11::qcrb(0.0), su11::InvalidArgument);
  REQUIRE_THROWS_AS(su11::qcrb(-3.0), su11::InvalidArgument);
  REQUIRE_THROWS_AS(su11::qcrb(4.0, 0), su11::InvalidArgument);
}

TEST_CASE("detection loss leaves the Fisher information intact at eta = 1") {
  for (unsigned m : {0u, 1u, 2u}) {
    ModelParams p = mk(1.0, 1.0, m, m, 1.0);
    CHECK(std::abs(su11::qfi_lossy(p) - su11::qfi_ideal(p)) <=
          1e-12 * su11::qfi_ideal(p));
  }
}

TEST_CASE("lossy Fisher information matches frozen reference values at eta = 0.8") {
  CHECK(rel_ok(su11::qfi_lossy(mk(1.0, 1.0, 0, 0, 0.8)), 27.007810242935648,
               1e-11));
  CHECK(rel_ok(su11::qfi_lossy(mk(1.0, 1.0, 1, 1, 0.8)), 57.14336309642199,
               1e-11));
  CHECK(rel_ok(su11::qfi_lossy(mk(1.0, 1.0, 2, 2, 0.8)), 82.4187977238029,
               1e-11));
  CHECK(rel_ok(su11::qcrb_lossy(mk(1.0, 1.0, 0, 0, 0.8)),
               0.19242226091622816, 1e-11));
  CHECK(rel_ok(su11::qcrb_lossy(mk(1.0, 1.0, 1, 1, 0.8)),
               0.13228697990767155, 1e-11));
  CHECK(rel_ok(su11::qcrb_lossy(mk(1.0, 1.0, 2, 2, 0.8)),
               0.110150598824021, 1e-11));
}

TEST_CASE("lossy Fisher information is monotone in eta and bounded by the ideal value") {
  for (unsigned mn : {0u, 1u, 2u}) {
    const double ideal = su11::qfi_ideal(mk(1.0, 1.0, mn, mn, 1.0));
    double prev = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double eta = double(k) / 50.0;
      const double fl = su11::qfi_lossy(mk(1.0, 1.0, mn, mn, eta));
      CHECK(fl > prev);
      CHECK(fl <= ideal * (1.0 + 1e-12));
      prev = fl;
    }
    CHECK(std::abs(prev - ideal) <= 1e-12 * ideal);
  }
}

TEST_CASE("Fisher information grows with pump strength and displacement") {
  double prev = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double g = 0.2 + (1.5 - 0.2) * double(k) / 20.0;
    const double f = su11::qfi_ideal(mk(g, 1.0, 1, 1, 1.0));
    CHECK(f > prev);
    prev = f;
  }
  prev = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double a = 0.2 + (2.0 - 0.2) * double(k) / 20.0;
    const double f = su11::qfi_ideal(mk(1.0, a, 1, 1, 1.0));
    CHECK(f > prev);
    prev = f;
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "su11/equivalence.hpp"
#include "su11/fock/oracle.hpp"
#include "su11/qfi.hpp"

using su11::ModelParams;
using su11::fock::FockBasisSpec;
using su11::fock::OracleOptions;
using su11::fock::SqueezeCache;

namespace {

ModelParams mk(double g, double alpha, unsigned m, unsigned n, double T,
               double phi) {
  ModelParams p;
  p.g = g;
  p.alpha = {alpha, 0.0};
  p.m = m;
  p.n = n;
  p.T = T;
  p.phi = phi;
  return p;
}

}  // namespace

TEST_CASE("trajectory unraveling equals the explicit density-matrix channel") {
  // Same fixed truncation for both pipelines; agreement is then a pure
  // bookkeeping identity, independent of truncation quality.
  const ModelParams p = mk(0.6, 0.5, 1, 1, 0.6, 0.4);
  const FockBasisSpec basis(12, 12);
  SqueezeCache cache;

  const auto traj = su11::fock::evaluate_trajectory_level(
      p, basis, {p.phi}, OracleOptions{}, cache);
  const auto dens = su11::fock::density_pipeline_stats(p, basis, &cache);

  CHECK(su11::relative_deviation(traj.per_phi[0].x, dens.x) < 1e-11);
  CHECK(su11::relative_deviation(traj.per_phi[0].x2, dens.x2) < 1e-11);
  CHECK(su11::relative_deviation(traj.mean_n, dens.mean_n) < 1e-11);
  CHECK(su11::relative_deviation(traj.total_weight, dens.weight) < 1e-11);
}

TEST_CASE("inserted-generator phase derivative equals a finite difference") {
  // At fixed truncation the derivative column is the exact derivative of the
  // truncated pipeline, so a central difference must agree to O(h^2).
  const double h = 1e-4, phi = 0.6;
  const ModelParams p = mk(0.8, 0.5, 1, 1, 1.0, phi);
  const FockBasisSpec basis(40, 40);
  SqueezeCache cache;

  const auto lvl = su11::fock::evaluate_trajectory_level(
      p, basis, {phi - h, phi + h, phi}, OracleOptions{}, cache);
  const double fd = (lvl.per_phi[1].x - lvl.per_phi[0].x) / (2.0 * h);
  CHECK(su11::relative_deviation(lvl.per_phi[2].dx, fd) < 1e-6);
}

TEST_CASE("oracle agrees with the closed form at a cheap lossy point") {
  SqueezeCache cache;
  const su11::PointComparison c = su11::compare_point(
      mk(0.5, 0.5, 1, 1, 0.7, 0.6), su11::closed_form_stats, OracleOptions{},
      &cache);
  CAPTURE(c.worst_field, c.worst_rel, c.level, c.certificate);
  CHECK(c.pass(1e-6));
  CHECK(c.fields.size() == 6);
  CHECK(c.certificate < 1e-8);
  CHECK(c.level >= 14);
}

TEST_CASE("Fisher-information oracle agrees with the closed form") {
  SqueezeCache cache;
  const ModelParams p = mk(0.5, 0.5, 1, 1, 1.0, 0.6);
  const su11::QfiComparison c =
      su11::compare_qfi_point(p, OracleOptions{}, &cache);
  CAPTURE(c.worst_rel, c.level);
  CHECK(c.pass(1e-6));
  CHECK(std::abs(c.f_closed - su11::qfi_ideal(p)) == 0.0);
}

TEST_CASE("oracle propagates degenerate subtraction") {
  REQUIRE_THROWS_AS(
      su11::fock::oracle_mean_x(mk(0.0, 0.5, 0, 1, 1.0, 0.6)),
      su11::DegenerateState);
}

TEST_CASE("oracle refuses to certify on an exhausted ladder") {
  OracleOptions opts;
  opts.ladder = {14, 20};
  // The 14-photon window cannot hold the alpha = 1 coherent tail, so only
  // one usable level remains and no consecutive-level certificate exists.
  REQUIRE_THROWS_AS(
      su11::fock::oracle_mean_x(mk(1.0, 1.0, 1, 1, 1.0, 0.6), opts),
      su11::TruncationError);
}

TEST_CASE("Fisher oracle rejects internal loss") {
  REQUIRE_THROWS_AS(su11::fock::oracle_qfi(mk(1.0, 1.0, 1, 1, 0.9, 0.6)),
                    su11::InvalidArgument);
}

TEST_CASE("a corrupted closed form is caught (the comparison has teeth)") {
  SqueezeCache cache;
  auto lying_provider = [](const ModelParams& q) {
    su11::ClosedFormStats s = su11::closed_form_stats(q);
    s.x *= 1.001;
    return s;
  };
  const su11::PointComparison c = su11::compare_point(
      mk(0.5, 0.5, 1, 1, 1.0, 0.6), lying_provider, OracleOptions{}, &cache);
  CHECK(!c.pass(1e-6));
  CHECK(c.worst_rel > 5e-4);
  CHECK(c.worst_field == "mean_x");
}

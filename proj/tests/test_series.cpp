#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "su11/series.hpp"

using su11::Complex;
using su11::MultiIndex;
using su11::TruncatedSeries;

namespace {

bool close(Complex a, Complex b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("series construction and coefficient access") {
  TruncatedSeries s = TruncatedSeries::constant({2.0, 1.0}, 3);
  REQUIRE(s.cap() == 3);
  REQUIRE(close(s.coeff(MultiIndex{}), {2.0, 1.0}));
  REQUIRE(close(s.coeff({1, 0, 0, 0}), {0.0, 0.0}));

  TruncatedSeries v = TruncatedSeries::variable(2, {0.0, -1.0}, 3);
  REQUIRE(close(v.coeff({0, 0, 1, 0}), {0.0, -1.0}));
}

TEST_CASE("add_term drops terms above the cap and accumulates below it") {
  TruncatedSeries s(2);
  s.add_term({1, 1, 0, 0}, {1.0, 0.0});
  s.add_term({1, 1, 0, 0}, {0.5, 0.0});
  s.add_term({1, 1, 1, 0}, {7.0, 0.0});  // degree 3 > cap, dropped
  REQUIRE(close(s.coeff({1, 1, 0, 0}), {1.5, 0.0}));
  REQUIRE(close(s.coeff({1, 1, 1, 0}), {0.0, 0.0}));
  REQUIRE(s.coeffs().size() == 1);
}

TEST_CASE("series_add sums coefficients and rejects cap mismatch") {
  TruncatedSeries a = TruncatedSeries::variable(0, {1.0, 0.0}, 2);
  TruncatedSeries b = TruncatedSeries::variable(0, {2.0, 0.0}, 2);
  TruncatedSeries c = su11::series_add(a, b);
  REQUIRE(close(c.coeff({1, 0, 0, 0}), {3.0, 0.0}));

  TruncatedSeries other_cap(3);
  REQUIRE_THROWS_AS(su11::series_add(a, other_cap), su11::CapMismatch);
  REQUIRE_THROWS_AS(su11::series_mul(a, other_cap), su11::CapMismatch);
}

TEST_CASE("series_mul is the truncated Cauchy product") {
  // (l1 + l2)^2 = l1^2 + 2 l1 l2 + l2^2
  TruncatedSeries s = su11::series_add(
      TruncatedSeries::variable(0, {1.0, 0.0}, 2),
      TruncatedSeries::variable(1, {1.0, 0.0}, 2));
  TruncatedSeries sq = su11::series_mul(s, s);
  REQUIRE(close(sq.coeff({2, 0, 0, 0}), {1.0, 0.0}));
  REQUIRE(close(sq.coeff({1, 1, 0, 0}), {2.0, 0.0}));
  REQUIRE(close(sq.coeff({0, 2, 0, 0}), {1.0, 0.0}));

  // Products above the cap vanish instead of aliasing.
  TruncatedSeries l12 = su11::series_mul(
      TruncatedSeries::variable(0, {1.0, 0.0}, 2),
      TruncatedSeries::variable(1, {1.0, 0.0}, 2));
  TruncatedSeries gone =
      su11::series_mul(l12, TruncatedSeries::variable(2, {1.0, 0.0}, 2));
  REQUIRE(gone.coeffs().empty());
}

TEST_CASE("series_exp of a quadratic exponent, cap 2") {
  // exp(l1 l2 + l3) truncated at degree 2: 1 + l3 + l1 l2 + l3^2/2.
  TruncatedSeries e = su11::series_add(
      su11::series_mul(TruncatedSeries::variable(0, {1.0, 0.0}, 2),
                       TruncatedSeries::variable(1, {1.0, 0.0}, 2)),
      TruncatedSeries::variable(2, {1.0, 0.0}, 2));
  TruncatedSeries r = su11::series_exp(e);
  REQUIRE(close(r.coeff(MultiIndex{}), {1.0, 0.0}));
  REQUIRE(close(r.coeff({0, 0, 1, 0}), {1.0, 0.0}));
  REQUIRE(close(r.coeff({1, 1, 0, 0}), {1.0, 0.0}));
  REQUIRE(close(r.coeff({0, 0, 2, 0}), {0.5, 0.0}));
  REQUIRE(r.coeffs().size() == 4);
}

TEST_CASE("series_exp matches the analytic expansion of exp(a l1 + b l2)") {
  const Complex a{0.7, -0.2}, b{-0.3, 0.5};
  TruncatedSeries e =
      su11::series_add(TruncatedSeries::variable(0, a, 6),
                       TruncatedSeries::variable(1, b, 6));
  TruncatedSeries r = su11::series_exp(e);
  for (unsigned j = 0; j <= 6; ++j) {
    Complex expect = std::pow(a, j);
    for (unsigned k = 1; k <= j; ++k) expect /= double(k);
    REQUIRE(close(r.coeff({j, 0, 0, 0}), expect));
  }
  // Mixed term l1^2 l2^3 -> a^2 b^3 / (2! 3!)
  REQUIRE(close(r.coeff({2, 3, 0, 0}), a * a * b * b * b / 12.0));
}

TEST_CASE("series_exp requires a zero constant term") {
  TruncatedSeries e = TruncatedSeries::constant({0.1, 0.0}, 2);
  REQUIRE_THROWS_AS(su11::series_exp(e), su11::NonzeroConstantTerm);
}

TEST_CASE("derivative_functional applies the factorial weights") {
  TruncatedSeries s(4);
  s.add_term({2, 1, 0, 0}, {3.0, 0.0});
  // d^2/dl1^2 d/dl2 at 0: 2! * 1! * 3 = 6.
  REQUIRE(close(su11::derivative_functional(s, {2, 1, 0, 0}), {6.0, 0.0}));
  REQUIRE(close(su11::derivative_functional(s, {1, 1, 0, 0}), {0.0, 0.0}));
  REQUIRE_THROWS_AS(su11::derivative_functional(s, {3, 1, 1, 0}),
                    su11::CapExceeded);
}

namespace {

Complex eval_series(const TruncatedSeries& s, const std::array<double, 4>& x) {
  Complex acc{0.0, 0.0};
  for (const auto& [idx, c] : s.coeffs()) {
    double mono = 1.0;
    for (unsigned v = 0; v < 4; ++v)
      for (unsigned j = 0; j < idx.k[v]; ++j) mono *= x[v];
    acc += c * mono;
  }
  return acc;
}

/// Tensor-product central finite difference for the mixed partial `idx`
/// at the origin with step h (O(h^2) accurate).
Complex fd_mixed_partial(const TruncatedSeries& s, const MultiIndex& idx,
                         double h) {
  std::array<unsigned, 4> k{idx.k[0], idx.k[1], idx.k[2], idx.k[3]};
  auto binom = [](unsigned n, unsigned r) {
    double b = 1.0;
    for (unsigned j = 0; j < r; ++j) b = b * double(n - j) / double(j + 1);
    return b;
  };
  Complex acc{0.0, 0.0};
  std::array<unsigned, 4> j{0, 0, 0, 0};
  while (true) {
    double w = 1.0;
    std::array<double, 4> x{};
    for (unsigned v = 0; v < 4; ++v) {
      w *= ((j[v] % 2) ? -1.0 : 1.0) * binom(k[v], j[v]);
      x[v] = (0.5 * double(k[v]) - double(j[v])) * h;
    }
    acc += w * eval_series(s, x);
    unsigned v = 0;
    for (; v < 4; ++v) {
      if (j[v] < k[v]) {
        ++j[v];
        break;
      }
      j[v] = 0;
    }
    if (v == 4) break;
  }
  return acc / std::pow(h, double(idx.total()));
}

}  // namespace

TEST_CASE("derivative_functional agrees with finite differences on random polynomials") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<unsigned> expo(0, 2);

  const double h = 1e-2;
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries s(4);
    std::vector<MultiIndex> indices;
    for (int t = 0; t < 6; ++t) {
      MultiIndex idx{expo(rng), expo(rng), expo(rng), expo(rng)};
      if (idx.total() > 4) continue;
      s.add_term(idx, {coeff(rng), coeff(rng)});
      indices.push_back(idx);
    }
    for (const MultiIndex& idx : indices) {
      const Complex exact = su11::derivative_functional(s, idx);
      const Complex d1 = fd_mixed_partial(s, idx, h);
      const Complex d2 = fd_mixed_partial(s, idx, 0.5 * h);
      const Complex rich = (4.0 * d2 - d1) / 3.0;  // O(h^4)
      REQUIRE(std::abs(rich - exact) <=
              1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

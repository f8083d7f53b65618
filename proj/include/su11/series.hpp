#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>

#include "su11/errors.hpp"
#include "su11/multi_index.hpp"

namespace su11 {

using Complex = std::complex<double>;

/// Sparse truncated Taylor series in four variables with complex
/// coefficients. Terms of total degree above `cap` are never stored;
/// arithmetic discards them. An absent index is a zero coefficient.
class TruncatedSeries {
 public:
  using CoeffMap = std::unordered_map<MultiIndex, Complex, MultiIndexHash>;

  explicit TruncatedSeries(unsigned cap) : cap_(cap) {}

  unsigned cap() const { return cap_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  Complex coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
  }

  /// Adds `c` to the coefficient at `idx`; silently drops terms above cap.
  void add_term(const MultiIndex& idx, Complex c) {
    if (idx.total() > cap_ || c == Complex{0.0, 0.0}) return;
    coeffs_[idx] += c;
  }

  static TruncatedSeries constant(Complex c, unsigned cap) {
    TruncatedSeries s(cap);
    s.add_term(MultiIndex{}, c);
    return s;
  }

  /// Monomial c * λ_var (var in 0..3).
  static TruncatedSeries variable(unsigned var, Complex c, unsigned cap) {
    TruncatedSeries s(cap);
    MultiIndex idx;
    idx.k[var] = 1;
    s.add_term(idx, c);
    return s;
  }

 private:
  unsigned cap_;
  CoeffMap coeffs_;
};

inline TruncatedSeries series_add(const TruncatedSeries& a,
                                  const TruncatedSeries& b) {
  if (a.cap() != b.cap())
    throw CapMismatch("series_add: operand caps differ");
  TruncatedSeries out(a.cap());
  for (const auto& [idx, c] : a.coeffs()) out.add_term(idx, c);
  for (const auto& [idx, c] : b.coeffs()) out.add_term(idx, c);
  return out;
}

/// Cauchy product; every term of total degree > cap is discarded.
inline TruncatedSeries series_mul(const TruncatedSeries& a,
                                  const TruncatedSeries& b) {
  if (a.cap() != b.cap())
    throw CapMismatch("series_mul: operand caps differ");
  TruncatedSeries out(a.cap());
  for (const auto& [ia, ca] : a.coeffs()) {
    for (const auto& [ib, cb] : b.coeffs()) {
      if (ia.total() + ib.total() > a.cap()) continue;
      MultiIndex idx(ia.k[0] + ib.k[0], ia.k[1] + ib.k[1], ia.k[2] + ib.k[2],
                     ia.k[3] + ib.k[3]);
      out.add_term(idx, ca * cb);
    }
  }
  return out;
}

/// exp(a) = Σ_{j=0..cap} a^j / j!. Exact for all coefficients of total
/// degree ≤ cap because a is required to have zero constant term, which
/// makes higher powers of a contribute only above the cap.
inline TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (a.coeff(MultiIndex{}) != Complex{0.0, 0.0})
    throw NonzeroConstantTerm("series_exp: nonzero constant term");
  TruncatedSeries result = TruncatedSeries::constant({1.0, 0.0}, a.cap());
  TruncatedSeries term = result;
  for (unsigned j = 1; j <= a.cap(); ++j) {
    TruncatedSeries next(a.cap());
    const TruncatedSeries prod = series_mul(term, a);
    for (const auto& [idx, c] : prod.coeffs())
      next.add_term(idx, c / double(j));
    term = std::move(next);
    if (term.coeffs().empty()) break;
    result = series_add(result, term);
  }
  return result;
}

namespace detail {
/// Exact factorials in integer arithmetic; 20! is the largest that fits.
inline std::uint64_t factorial_u64(unsigned n) {
  static constexpr std::uint64_t table[21] = {
      1ull,
      1ull,
      2ull,
      6ull,
      24ull,
      120ull,
      720ull,
      5040ull,
      40320ull,
      362880ull,
      3628800ull,
      39916800ull,
      479001600ull,
      6227020800ull,
      87178291200ull,
      1307674368000ull,
      20922789888000ull,
      355687428096000ull,
      6402373705728000ull,
      121645100408832000ull,
      2432902008176640000ull};
  if (n > 20) throw CapExceeded("factorial beyond exact integer range (20)");
  return table[n];
}
}  // namespace detail

/// D_{k1,k2,k3,k4} s |_{λ=0} = k1!·k2!·k3!·k4! × coefficient of
/// λ1^{k1} λ2^{k2} λ3^{k3} λ4^{k4}.
inline Complex derivative_functional(const TruncatedSeries& s,
                                     const MultiIndex& idx) {
  if (idx.total() > s.cap())
    throw CapExceeded("derivative_functional: index exceeds series cap");
  double f = 1.0;
  for (unsigned v = 0; v < 4; ++v)
    f *= double(detail::factorial_u64(idx.k[v]));
  return s.coeff(idx) * f;
}

}  // namespace su11

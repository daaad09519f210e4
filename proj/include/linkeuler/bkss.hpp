#pragma once

// First page of the cohomology Bousfield-Kan spectral sequence for the
// cosimplicial model of long links: E1 dimension tables, slopes, Euler
// series in summed and closed form, the relative series for the pair
// (links, ell-fold product of knots), growth estimates, and executable
// checks of the finite-difference identities behind the closed form.
//
// E1^{p,*}[x] = sum_{i=0}^{p} (-1)^(p-i) C(p, i) H^*(X^i)[x], with X^i the
// configuration space of ell*i points. Only E1 is computed; the Euler series
// of a line does not change from E1 to E2 since d1 is horizontal.

#include "linkeuler/conf_poincare.hpp"
#include "linkeuler/exact_arith.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace linkeuler {

/// An E1 line came out with a negative dimension.
class ModelInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Slopes requested from a table with nothing nonzero off column 0.
class UndefinedSlopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A ratio was requested across a zero coefficient.
class UndefinedRatioError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TableEntry {
  std::int64_t p;
  std::int64_t q;
  ExactInt dim;
};

/// dim E1^{p,q} for 0 <= p <= p_max.
class BigradedDimTable {
 public:
  BigradedDimTable(ModelParams params, std::vector<IntPolynomial> lines);

  const ModelParams& params() const { return params_; }
  std::int64_t p_max() const {
    return static_cast<std::int64_t>(lines_.size()) - 1;
  }
  /// Poincare polynomial of column p.
  const IntPolynomial& line(std::int64_t p) const;
  ExactInt dim(std::int64_t p, std::int64_t q) const;
  /// Nonzero entries ordered by (p, q).
  std::vector<TableEntry> nonzero_entries() const;

 private:
  ModelParams params_;
  std::vector<IntPolynomial> lines_;
};

IntPolynomial e1_line(std::int64_t p, const ModelParams& params);
BigradedDimTable e1_table(std::int64_t p_max, const ModelParams& params);

struct Slopes {
  Rational lower;
  Rational upper;
};

/// Extreme values of q/p over nonzero entries with p >= 1.
Slopes empirical_slopes(const BigradedDimTable& table);

/// Euler series from the alternating double sum over cosimplicial terms.
/// The coefficient of u^j (u = x^(N-1)) is
///   sum_{p=0}^{2j} sum_r (-1)^r C(p,r) [ell r; ell r - j],
/// the cutoff justified by [ell r; ell r - j] being a degree-2j polynomial in
/// r. The p = 2j+1 term is checked to vanish.
TruncatedSeries euler_series_summed(const ModelParams& params, std::size_t D);

/// 1 / ((1 - u)(1 - 2u)...(1 - ell u)) with u = x^(N-1), through x^D.
TruncatedSeries euler_series_closed(const ModelParams& params, std::size_t D);

/// 1 / (1 - u)^ell with u = x^(N-1), through x^D.
TruncatedSeries knot_power_series(const ModelParams& params, std::size_t D);

/// euler_series_closed - knot_power_series.
TruncatedSeries relative_series(const ModelParams& params, std::size_t D);

struct EulerSeriesReport {
  ModelParams params;
  std::size_t trunc_degree;
  TruncatedSeries summed;
  TruncatedSeries closed;
  bool agree;
};

EulerSeriesReport euler_series_report(const ModelParams& params, std::size_t D);

struct TotLowerBound {
  ExactInt bound;
  std::int64_t window_lo;
  std::int64_t window_hi;
};

/// |coefficient of x^n| bounds the total dimension of Tot(E2) over
/// degrees ceil(n (1 - 1/alpha)) .. n when alpha > 1 is a lower slope.
TotLowerBound tot_lower_bound(std::int64_t n, const Rational& alpha,
                              const TruncatedSeries& series);

struct GrowthEstimate {
  double u_ratio;
  double x_rate;
};

/// Mean of the last `tail` consecutive ratios between lattice coefficients
/// (degrees divisible by N-1), and its (N-1)-th root.
GrowthEstimate growth_rate(const TruncatedSeries& series, std::int64_t dim,
                           std::size_t tail);

struct FiniteDifferenceReport {
  bool ok;
  /// sum_p s_p x^p with s_p = sum_r (-1)^r C(p,r) q(r).
  IntPolynomial s_poly;
  ExactInt q_at_minus_one;
  ExactInt total;
};

/// Checks sum_p sum_r (-1)^r C(p,r) q(r) = q(-1) for the polynomial with the
/// given monomial coefficients. s_p is evaluated for p = 0..deg+2 and the
/// terms past deg must vanish.
FiniteDifferenceReport verify_finite_difference_sum(
    std::span<const ExactInt> q_coeffs);

/// (r + 1)(r + 2)...(r + d) as a polynomial in r.
IntPolynomial rising_product(std::size_t d);

struct StirlingIdentityReport {
  bool ok;
  ExactInt lhs;
  ExactInt rhs;
};

/// Checks sum_p sum_r (-1)^r C(p,r) [ell r; ell r - j] = {ell + j; ell}.
StirlingIdentityReport verify_stirling_alternating_identity(std::int64_t ell,
                                                            std::int64_t j);

}  // namespace linkeuler

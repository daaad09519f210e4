#include "linkeuler/bkss.hpp"

#include "linkeuler/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace linkeuler {

// --- E1 page ---------------------------------------------------------------

BigradedDimTable::BigradedDimTable(ModelParams params,
                                   std::vector<IntPolynomial> lines)
    : params_(params), lines_(std::move(lines)) {
  if (lines_.empty()) throw UsageError("BigradedDimTable: no columns");
}

const IntPolynomial& BigradedDimTable::line(std::int64_t p) const {
  if (p < 0 || p > p_max()) {
    throw UsageError("column p = " + std::to_string(p) + " outside 0.." +
                     std::to_string(p_max()));
  }
  return lines_[static_cast<std::size_t>(p)];
}

ExactInt BigradedDimTable::dim(std::int64_t p, std::int64_t q) const {
  if (q < 0) return 0;
  return line(p).coeff(static_cast<std::size_t>(q));
}

std::vector<TableEntry> BigradedDimTable::nonzero_entries() const {
  std::vector<TableEntry> out;
  for (std::size_t p = 0; p < lines_.size(); ++p) {
    const auto c = lines_[p].coeffs();
    for (std::size_t q = 0; q < c.size(); ++q) {
      if (!c[q].is_zero()) {
        out.push_back({static_cast<std::int64_t>(p),
                       static_cast<std::int64_t>(q), c[q]});
      }
    }
  }
  return out;
}

IntPolynomial e1_line(std::int64_t p, const ModelParams& params) {
  if (p < 0) throw UsageError("e1_line: p must be >= 0");
  IntPolynomial acc(Var::x);
  for (std::int64_t i = 0; i <= p; ++i) {
    const ExactInt sign = (p - i) % 2 == 0 ? 1 : -1;
    acc = acc + (sign * binomial(p, i)) * link_term_poincare(i, params);
  }
  const auto c = acc.coeffs();
  for (std::size_t q = 0; q < c.size(); ++q) {
    if (c[q].sign() < 0) {
      throw ModelInconsistencyError(
          "E1 entry (" + std::to_string(p) + "," + std::to_string(q) +
          ") is negative: " + to_string(c[q]));
    }
  }
  return acc;
}

BigradedDimTable e1_table(std::int64_t p_max, const ModelParams& params) {
  if (p_max < 0) throw UsageError("e1_table: p_max must be >= 0");
  std::vector<IntPolynomial> lines;
  lines.reserve(static_cast<std::size_t>(p_max) + 1);
  for (std::int64_t p = 0; p <= p_max; ++p) lines.push_back(e1_line(p, params));
  return BigradedDimTable(params, std::move(lines));
}

Slopes empirical_slopes(const BigradedDimTable& table) {
  std::optional<Slopes> s;
  for (const auto& e : table.nonzero_entries()) {
    if (e.p < 1) continue;
    const Rational r(e.q, e.p);
    if (!s) {
      s = Slopes{r, r};
    } else {
      s->lower = std::min(s->lower, r);
      s->upper = std::max(s->upper, r);
    }
  }
  if (!s) {
    throw UndefinedSlopeError(
        "slopes undefined: no nonzero E1 entry with p >= 1 up to p_max = " +
        std::to_string(table.p_max()));
  }
  return *s;
}

// --- Euler series ----------------------------------------------------------

namespace {

std::size_t lattice_trunc(const ModelParams& params, std::size_t D) {
  return D / params.lattice_step();
}

TruncatedSeries to_x(const TruncatedSeries& u_series,
                     const ModelParams& params, std::size_t D) {
  return substitute_power(u_series, params.lattice_step(), D, Var::x);
}

// Coefficient of u^j in the summed Euler series.
ExactInt summed_coefficient(std::int64_t ell, std::int64_t j) {
  const std::int64_t cutoff = 2 * j;
  std::vector<ExactInt> values;
  values.reserve(static_cast<std::size_t>(cutoff) + 2);
  for (std::int64_t r = 0; r <= cutoff + 1; ++r) {
    values.push_back(stirling1_ext(ell * r, ell * r - j));
  }
  const auto s = binomial_transform(values);
  if (!s.back().is_zero()) {
    throw InternalError("outer sum does not vanish at p = " +
                        std::to_string(cutoff + 1) + " for ell = " +
                        std::to_string(ell) + ", j = " + std::to_string(j) +
                        " (term " + to_string(s.back()) + ")");
  }
  ExactInt total = 0;
  for (std::int64_t p = 0; p <= cutoff; ++p) total += s[p];
  return total;
}

}  // namespace

TruncatedSeries euler_series_summed(const ModelParams& params, std::size_t D) {
  const std::size_t du = lattice_trunc(params, D);
  std::vector<ExactInt> coeffs;
  coeffs.reserve(du + 1);
  for (std::size_t j = 0; j <= du; ++j) {
    coeffs.push_back(
        summed_coefficient(params.ell(), static_cast<std::int64_t>(j)));
  }
  return to_x(TruncatedSeries(IntPolynomial(std::move(coeffs), Var::u), du),
              params, D);
}

TruncatedSeries euler_series_closed(const ModelParams& params, std::size_t D) {
  const std::size_t du = lattice_trunc(params, D);
  TruncatedSeries denom = TruncatedSeries::one(du, Var::u);
  for (std::int64_t m = 1; m <= params.ell(); ++m) {
    denom = denom * TruncatedSeries(IntPolynomial({1, -m}, Var::u), du);
  }
  return to_x(series_inverse(denom), params, D);
}

TruncatedSeries knot_power_series(const ModelParams& params, std::size_t D) {
  const std::size_t du = lattice_trunc(params, D);
  const TruncatedSeries base(IntPolynomial({1, -1}, Var::u), du);
  TruncatedSeries denom = TruncatedSeries::one(du, Var::u);
  for (std::int64_t m = 1; m <= params.ell(); ++m) denom = denom * base;
  return to_x(series_inverse(denom), params, D);
}

TruncatedSeries relative_series(const ModelParams& params, std::size_t D) {
  return euler_series_closed(params, D) - knot_power_series(params, D);
}

EulerSeriesReport euler_series_report(const ModelParams& params,
                                      std::size_t D) {
  auto summed = euler_series_summed(params, D);
  auto closed = euler_series_closed(params, D);
  const bool agree = summed == closed;
  return {params, D, std::move(summed), std::move(closed), agree};
}

// --- bounds and growth -----------------------------------------------------

TotLowerBound tot_lower_bound(std::int64_t n, const Rational& alpha,
                              const TruncatedSeries& series) {
  if (alpha <= 1) {
    throw UsageError("tot_lower_bound: lower slope alpha must be > 1 (got " +
                     to_string(alpha) + ")");
  }
  if (n < 0 || static_cast<std::size_t>(n) > series.trunc_degree()) {
    throw UsageError("tot_lower_bound: degree " + std::to_string(n) +
                     " outside 0.." + std::to_string(series.trunc_degree()));
  }
  const ExactInt c = series.coeff(static_cast<std::size_t>(n));
  const Rational lo = Rational(n) * (Rational(1) - Rational(1) / alpha);
  return {boost::multiprecision::abs(c), ceil(lo).convert_to<std::int64_t>(),
          n};
}

GrowthEstimate growth_rate(const TruncatedSeries& series, std::int64_t dim,
                           std::size_t tail) {
  if (dim < 2) throw UsageError("growth_rate: N must be >= 2");
  if (tail < 1) throw UsageError("growth_rate: tail must be >= 1");
  const auto step = static_cast<std::size_t>(dim - 1);
  const std::size_t last = series.trunc_degree() / step;
  if (last < tail) {
    throw UsageError("growth_rate: only " + std::to_string(last + 1) +
                     " lattice coefficients available, tail needs " +
                     std::to_string(tail + 1));
  }
  const std::size_t first = last - tail;
  for (std::size_t j = first; j <= last; ++j) {
    if (series.coeff(j * step).is_zero()) {
      throw UndefinedRatioError("growth_rate: zero coefficient at degree " +
                                std::to_string(j * step));
    }
  }
  double sum = 0.0;
  for (std::size_t j = first; j < last; ++j) {
    const Rational ratio(series.coeff((j + 1) * step), series.coeff(j * step));
    sum += ratio.convert_to<double>();
  }
  const double mean = sum / static_cast<double>(tail);
  if (!(mean > 0.0)) {
    throw UndefinedRatioError("growth_rate: mean ratio " +
                              std::to_string(mean) + " is not positive");
  }
  return {mean, std::pow(mean, 1.0 / static_cast<double>(step))};
}

// --- identity checks -------------------------------------------------------

IntPolynomial rising_product(std::size_t d) {
  IntPolynomial acc = IntPolynomial::constant(1, Var::x);
  for (std::size_t i = 1; i <= d; ++i) {
    acc = acc * IntPolynomial({static_cast<std::int64_t>(i), 1}, Var::x);
  }
  return acc;
}

FiniteDifferenceReport verify_finite_difference_sum(
    std::span<const ExactInt> q_coeffs) {
  if (q_coeffs.empty()) {
    throw UsageError("verify_finite_difference_sum: empty coefficient list");
  }
  const IntPolynomial q(std::vector<ExactInt>(q_coeffs.begin(), q_coeffs.end()),
                        Var::x);
  const std::size_t d = q.is_zero() ? 0 : static_cast<std::size_t>(q.degree());
  std::vector<ExactInt> values;
  for (std::size_t r = 0; r <= d + 2; ++r) values.push_back(q.eval(r));
  const auto s = binomial_transform(values);

  bool ok = true;
  for (std::size_t p = d + 1; p < s.size(); ++p) ok = ok && s[p].is_zero();
  ExactInt total = 0;
  for (const auto& v : s) total += v;
  const ExactInt at_minus_one = q.eval(-1);
  ok = ok && total == at_minus_one;
  return {ok, IntPolynomial(s, Var::x), at_minus_one, total};
}

StirlingIdentityReport verify_stirling_alternating_identity(std::int64_t ell,
                                                            std::int64_t j) {
  if (ell < 1 || j < 1) {
    throw UsageError("verify_stirling_alternating_identity: ell, j must be >= 1");
  }
  ExactInt lhs = summed_coefficient(ell, j);
  ExactInt rhs = stirling2(ell + j, ell);
  const bool ok = lhs == rhs;
  return {ok, std::move(lhs), std::move(rhs)};
}

}  // namespace linkeuler

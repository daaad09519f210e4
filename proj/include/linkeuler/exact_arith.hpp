#pragma once

// Exact integer, polynomial and truncated power series arithmetic.
//
// Everything here works over the integers. Series inversion is only offered
// for unit constant terms, so no rational coefficient ever appears.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linkeuler {

using ExactInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Caller violated a documented precondition (bad argument, mismatched tags).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series whose constant term is not +1 or -1 has no integral inverse.
class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant failed. Seeing one of these means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Name of the formal variable. Poincare series live in `x`; the
/// lattice variable u stands for x^(N-1).
enum class Var : char { x = 'x', u = 'u', y = 'y' };

std::string_view var_name(Var v);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(Var var) : var_(var) {}
  IntPolynomial(std::vector<ExactInt> coeffs, Var var);
  IntPolynomial(std::initializer_list<std::int64_t> coeffs, Var var = Var::x);

  static IntPolynomial constant(const ExactInt& c, Var var = Var::x);
  static IntPolynomial monomial(const ExactInt& c, std::size_t degree,
                                Var var = Var::x);

  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 stands in for the degree of the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const ExactInt> coeffs() const { return coeffs_; }
  /// Coefficient of var^k; zero past the degree.
  ExactInt coeff(std::size_t k) const;

  ExactInt eval(const ExactInt& t) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator*=(const ExactInt& scalar);

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const ExactInt& s, IntPolynomial p) {
    p *= s;
    return p;
  }

  /// Equality compares coefficients and the variable tag.
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<ExactInt> coeffs_;
  Var var_ = Var::x;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
ExactInt poly_eval(const IntPolynomial& p, const ExactInt& t);

/// Replaces var by target^m. Throws UsageError for m == 0.
IntPolynomial substitute_power(const IntPolynomial& p, std::size_t m,
                               Var target = Var::x);

/// A power series known through degree `trunc_degree` (inclusive).
/// Binary operations keep the smaller of the two truncations.
class TruncatedSeries {
 public:
  TruncatedSeries(IntPolynomial poly, std::size_t trunc_degree);

  static TruncatedSeries zero(std::size_t trunc_degree, Var var = Var::x);
  static TruncatedSeries one(std::size_t trunc_degree, Var var = Var::x);

  const IntPolynomial& poly() const { return poly_; }
  std::size_t trunc_degree() const { return trunc_; }
  Var var() const { return poly_.var(); }
  ExactInt coeff(std::size_t k) const;

  TruncatedSeries truncated(std::size_t new_trunc) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  IntPolynomial poly_;
  std::size_t trunc_;
};

/// Multiplicative inverse modulo var^(D+1). The constant term must be +-1.
TruncatedSeries series_inverse(const TruncatedSeries& s);

/// Substitutes var -> target^m. The result is known through m*D.
TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t m,
                                 Var target = Var::x);

/// Same substitution, but reported through `target_trunc`. Degrees in
/// (m*D, m*(D+1)) are not multiples of m, so their coefficients are exactly
/// zero; any target_trunc < m*(D+1) is therefore still exact.
TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t m,
                                 std::size_t target_trunc, Var target);

/// C(n, k) for n >= 0; zero for k outside [0, n].
ExactInt binomial(std::int64_t n, std::int64_t k);

/// C(top, k) for any integer top: falling factorial top(top-1)...(top-k+1)/k!.
ExactInt binomial_general(const ExactInt& top, std::int64_t k);

/// sum_{r=0}^{p} (-1)^r C(p, r) values[r]. Reads values[0..p].
ExactInt alt_binomial_sum(std::span<const ExactInt> values, std::size_t p);

template <typename F>
  requires std::invocable<F&, std::int64_t>
ExactInt alt_binomial_sum(F&& f, std::size_t p) {
  std::vector<ExactInt> values;
  values.reserve(p + 1);
  for (std::size_t r = 0; r <= p; ++r) {
    values.emplace_back(f(static_cast<std::int64_t>(r)));
  }
  return alt_binomial_sum(values, p);
}

/// The whole sequence p -> alt_binomial_sum(values, p) for p < values.size().
/// Applying it twice gives back the input.
std::vector<ExactInt> binomial_transform(std::span<const ExactInt> values);

/// Smallest integer >= q.
ExactInt ceil(const Rational& q);

std::string to_string(const ExactInt& v);
std::string to_string(const Rational& q);
/// Parses "a" or "a/b". Throws UsageError.
Rational parse_rational(std::string_view text);

}  // namespace linkeuler

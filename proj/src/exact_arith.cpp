#include "linkeuler/exact_arith.hpp"

#include <algorithm>
#include <sstream>

namespace linkeuler {

namespace {

void require_same_var(const IntPolynomial& a, const IntPolynomial& b,
                      const char* op) {
  if (a.var() != b.var()) {
    throw UsageError(std::string(op) + ": mismatched variables '" +
                     std::string(var_name(a.var())) + "' and '" +
                     std::string(var_name(b.var())) + "'");
  }
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::x:
      return "x";
    case Var::u:
      return "u";
    case Var::y:
      return "y";
  }
  return "?";
}

// --- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<ExactInt> coeffs, Var var)
    : coeffs_(std::move(coeffs)), var_(var) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs,
                             Var var)
    : var_(var) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const ExactInt& c, Var var) {
  return IntPolynomial(std::vector<ExactInt>{c}, var);
}

IntPolynomial IntPolynomial::monomial(const ExactInt& c, std::size_t degree,
                                      Var var) {
  std::vector<ExactInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs), var);
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactInt(0);
}

ExactInt IntPolynomial::eval(const ExactInt& t) const {
  // Horner
  ExactInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator*=(const ExactInt& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_var(a, b, "poly_add");
  std::vector<ExactInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out), a.var());
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_var(a, b, "poly_sub");
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_var(a, b, "poly_mul");
  if (a.is_zero() || b.is_zero()) return IntPolynomial(a.var());
  std::vector<ExactInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out), a.var());
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto v = var_name(var_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const ExactInt& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const ExactInt mag = neg ? ExactInt(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << v;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  return a + b;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  return a * b;
}

ExactInt poly_eval(const IntPolynomial& p, const ExactInt& t) {
  return p.eval(t);
}

IntPolynomial substitute_power(const IntPolynomial& p, std::size_t m,
                               Var target) {
  if (m == 0) throw UsageError("substitute_power: exponent must be >= 1");
  if (p.is_zero()) return IntPolynomial(target);
  std::vector<ExactInt> out(m * (p.size() - 1) + 1);
  for (std::size_t k = 0; k < p.size(); ++k) out[m * k] = p.coeffs()[k];
  return IntPolynomial(std::move(out), target);
}

// --- TruncatedSeries -------------------------------------------------------

namespace {

IntPolynomial cut(const IntPolynomial& p, std::size_t trunc) {
  if (p.size() <= trunc + 1) return p;
  auto c = p.coeffs();
  return IntPolynomial(std::vector<ExactInt>(c.begin(), c.begin() + trunc + 1),
                       p.var());
}

}  // namespace

TruncatedSeries::TruncatedSeries(IntPolynomial poly, std::size_t trunc_degree)
    : poly_(cut(poly, trunc_degree)), trunc_(trunc_degree) {}

TruncatedSeries TruncatedSeries::zero(std::size_t trunc_degree, Var var) {
  return TruncatedSeries(IntPolynomial(var), trunc_degree);
}

TruncatedSeries TruncatedSeries::one(std::size_t trunc_degree, Var var) {
  return TruncatedSeries(IntPolynomial::constant(1, var), trunc_degree);
}

ExactInt TruncatedSeries::coeff(std::size_t k) const {
  if (k > trunc_) {
    throw UsageError("coefficient of degree " + std::to_string(k) +
                     " lies beyond truncation degree " +
                     std::to_string(trunc_));
  }
  return poly_.coeff(k);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_trunc) const {
  if (new_trunc > trunc_) {
    throw UsageError("cannot raise truncation degree from " +
                     std::to_string(trunc_) + " to " +
                     std::to_string(new_trunc));
  }
  return TruncatedSeries(poly_, new_trunc);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries(a.poly_ + b.poly_, std::min(a.trunc_, b.trunc_));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries(a.poly_ - b.poly_, std::min(a.trunc_, b.trunc_));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t d = std::min(a.trunc_, b.trunc_);
  return TruncatedSeries(cut(a.poly_, d) * cut(b.poly_, d), d);
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  const ExactInt c0 = s.poly().coeff(0);
  if (c0 != 1 && c0 != -1) {
    throw NonInvertibleError("series_inverse: constant term " + to_string(c0) +
                             " is not a unit in the integers");
  }
  const std::size_t d = s.trunc_degree();
  std::vector<ExactInt> t(d + 1);
  t[0] = c0;  // c0 is its own inverse
  const auto sc = s.poly().coeffs();
  for (std::size_t k = 1; k <= d; ++k) {
    ExactInt acc = 0;
    const std::size_t top = std::min(k, sc.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) acc += sc[i] * t[k - i];
    t[k] = -c0 * acc;
  }
  return TruncatedSeries(IntPolynomial(std::move(t), s.var()), d);
}

TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t m,
                                 Var target) {
  if (m == 0) throw UsageError("substitute_power: exponent must be >= 1");
  return TruncatedSeries(substitute_power(s.poly(), m, target),
                         m * s.trunc_degree());
}

TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t m,
                                 std::size_t target_trunc, Var target) {
  if (m == 0) throw UsageError("substitute_power: exponent must be >= 1");
  if (target_trunc >= m * (s.trunc_degree() + 1)) {
    throw UsageError("substitute_power: requested truncation " +
                     std::to_string(target_trunc) +
                     " exceeds what the source series determines");
  }
  return TruncatedSeries(substitute_power(s.poly(), m, target), target_trunc);
}

// --- binomials and the alternating transform -------------------------------

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw UsageError("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt r = 1;
  // r stays C(n-k+i, i) after step i, so each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactInt binomial_general(const ExactInt& top, std::int64_t k) {
  if (k < 0) return 0;
  ExactInt num = 1;
  ExactInt den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  ExactInt q;
  ExactInt rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (!rem.is_zero()) {
    throw InternalError("binomial_general: inexact division");
  }
  return q;
}

ExactInt alt_binomial_sum(std::span<const ExactInt> values, std::size_t p) {
  if (values.size() < p + 1) {
    throw UsageError("alt_binomial_sum: need values on 0.." +
                     std::to_string(p));
  }
  ExactInt acc = 0;
  ExactInt c = 1;  // C(p, r)
  for (std::size_t r = 0; r <= p; ++r) {
    if (r % 2 == 0) {
      acc += c * values[r];
    } else {
      acc -= c * values[r];
    }
    c *= p - r;
    c /= r + 1;
  }
  return acc;
}

std::vector<ExactInt> binomial_transform(std::span<const ExactInt> values) {
  std::vector<ExactInt> out;
  out.reserve(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    out.push_back(alt_binomial_sum(values, p));
  }
  return out;
}

// --- rationals and formatting ----------------------------------------------

ExactInt ceil(const Rational& q) {
  const ExactInt num = boost::multiprecision::numerator(q);
  const ExactInt den = boost::multiprecision::denominator(q);  // > 0
  ExactInt quo;
  ExactInt rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);  // truncates
  if (rem.sign() > 0) quo += 1;
  return quo;
}

std::string to_string(const ExactInt& v) { return v.str(); }

std::string to_string(const Rational& q) {
  const ExactInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> ExactInt {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw UsageError("not a rational: '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw UsageError("not a rational: '" + std::string(text) + "'");
      }
    }
    return ExactInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const ExactInt num = parse_int(text.substr(0, slash));
  const ExactInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace linkeuler

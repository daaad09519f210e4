#include "linkeuler/conf_poincare.hpp"

#include "linkeuler/combinatorics.hpp"

#include <string>

namespace linkeuler {

namespace {

void require_dim(std::int64_t dim) {
  if (dim < 3) {
    throw ParameterError("ambient dimension N must be >= 3 (got " +
                         std::to_string(dim) + ")");
  }
}

}  // namespace

ModelParams::ModelParams(std::int64_t dim, std::int64_t ell)
    : dim_(dim), ell_(ell) {
  require_dim(dim);
  if (ell < 1) {
    throw ParameterError("number of strings ell must be >= 1 (got " +
                         std::to_string(ell) + ")");
  }
}

IntPolynomial conf_poincare_lattice(std::int64_t k) {
  if (k < 0) throw UsageError("conf_poincare: k must be >= 0");
  IntPolynomial acc = IntPolynomial::constant(1, Var::u);
  for (std::int64_t j = 1; j < k; ++j) {
    acc = acc * IntPolynomial({1, j}, Var::u);
  }
  return acc;
}

IntPolynomial conf_poincare(std::int64_t k, std::int64_t dim) {
  require_dim(dim);
  return substitute_power(conf_poincare_lattice(k),
                          static_cast<std::size_t>(dim - 1), Var::x);
}

IntPolynomial link_term_poincare(std::int64_t p, const ModelParams& params) {
  if (p < 0) throw UsageError("link_term_poincare: p must be >= 0");
  return conf_poincare(params.ell() * p, params.dim());
}

bool stirling_coefficient_check(std::int64_t k, std::int64_t dim,
                                std::int64_t j) {
  if (k < 0 || j < 0) throw UsageError("stirling_coefficient_check: negative index");
  const IntPolynomial poly = conf_poincare(k, dim);
  const auto degree = static_cast<std::size_t>((dim - 1) * j);
  return poly.coeff(degree) == stirling1(k, k - j);
}

}  // namespace linkeuler

#pragma once

// Poincare polynomials of ordered configuration spaces Conf(k, R^N) and of
// the terms of the cosimplicial model for long links with ell strings.

#include "linkeuler/exact_arith.hpp"

#include <cstdint>

namespace linkeuler {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ambient dimension N and number of strings ell.
///
/// N >= 3 and ell >= 1 are enforced. The growth and slope statements only
/// hold for N >= 4; N = 3 is accepted for exploration and flagged through
/// theorem_grade().
class ModelParams {
 public:
  ModelParams(std::int64_t dim, std::int64_t ell);

  std::int64_t dim() const { return dim_; }
  std::int64_t ell() const { return ell_; }
  /// Spacing of the degree lattice, N - 1.
  std::size_t lattice_step() const { return static_cast<std::size_t>(dim_ - 1); }
  bool theorem_grade() const { return dim_ >= 4; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  std::int64_t dim_;
  std::int64_t ell_;
};

/// prod_{j=1}^{k-1} (1 + j u) in the lattice variable u.
IntPolynomial conf_poincare_lattice(std::int64_t k);

/// H^*(Conf(k, R^N))[x] = prod_{j=1}^{k-1} (1 + j x^(N-1)).
IntPolynomial conf_poincare(std::int64_t k, std::int64_t dim);

/// Poincare polynomial of the p-th cosimplicial term, Conf(ell * p, R^N).
IntPolynomial link_term_poincare(std::int64_t p, const ModelParams& params);

/// True iff the x^((N-1) j) coefficient of conf_poincare(k, N) is [k; k-j].
bool stirling_coefficient_check(std::int64_t k, std::int64_t dim,
                                std::int64_t j);

}  // namespace linkeuler

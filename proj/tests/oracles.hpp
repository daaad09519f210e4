#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it checks: additive Pascal rows instead of the
// multiplicative binomial, repeated forward differencing instead of the
// alternating sum, subset/multiset enumeration instead of polynomial
// products and series inversion.

#include "linkeuler/exact_arith.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using linkeuler::ExactInt;

/// Rows 0..n_max of Pascal's triangle, built by addition only.
inline std::vector<std::vector<ExactInt>> pascal(std::size_t n_max) {
  std::vector<std::vector<ExactInt>> rows{{ExactInt(1)}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<ExactInt> row(n + 1);
    row[0] = row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// (-1)^p times the p-th forward difference at 0, by repeated differencing.
inline ExactInt signed_forward_difference(std::vector<ExactInt> values,
                                          std::size_t p) {
  values.resize(p + 1);
  for (std::size_t level = 0; level < p; ++level) {
    for (std::size_t i = 0; i + 1 < values.size() - level; ++i) {
      values[i] = values[i + 1] - values[i];
    }
  }
  return p % 2 == 0 ? values[0] : ExactInt(-values[0]);
}

/// e_j(1, 2, ..., m) by summing products over all j-subsets.
inline ExactInt elementary_symmetric(std::int64_t m, std::int64_t j) {
  if (j < 0 || j > m) return 0;
  ExactInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) != j) continue;
    ExactInt prod = 1;
    for (std::int64_t i = 0; i < m; ++i) {
      if (mask >> i & 1) prod *= i + 1;
    }
    total += prod;
  }
  return total;
}

/// h_j(w_1, ..., w_m): sum over multisets of size j of the product of weights.
inline ExactInt complete_homogeneous(const std::vector<std::int64_t>& weights,
                                     std::int64_t j) {
  std::function<ExactInt(std::size_t, std::int64_t)> go =
      [&](std::size_t from, std::int64_t left) -> ExactInt {
    if (left == 0) return 1;
    ExactInt total = 0;
    for (std::size_t i = from; i < weights.size(); ++i) {
      total += weights[i] * go(i, left - 1);
    }
    return total;
  };
  return go(0, j);
}

inline std::vector<std::int64_t> one_to(std::int64_t m) {
  std::vector<std::int64_t> w;
  for (std::int64_t i = 1; i <= m; ++i) w.push_back(i);
  return w;
}

inline ExactInt factorial(std::int64_t n) {
  ExactInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline ExactInt double_factorial_odd(std::int64_t n) {  // (2n-1)!!
  ExactInt f = 1;
  for (std::int64_t i = 1; i <= 2 * n - 1; i += 2) f *= i;
  return f;
}

}  // namespace oracle

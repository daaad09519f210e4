#pragma once

// Stirling numbers (unsigned convention), their extension to all integer
// arguments, second-order Eulerian numbers, and the binomial-basis
// polynomial that interpolates [x; x-n].

#include "linkeuler/exact_arith.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace linkeuler {

/// Requested enumeration is beyond the brute-force oracle's scale cap.
class OracleScaleError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class StirlingKind { first, second };

/// Triangular table of Stirling numbers, grown on demand.
///
/// Rows are appended under a mutex; lookups return copies so concurrent
/// readers never observe a row being resized.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind);

  StirlingKind kind() const { return kind_; }
  /// Table value for 0 <= k <= n; zero for k outside that range.
  ExactInt value(std::int64_t n, std::int64_t k);
  /// Copy of row n (k = 0..n).
  std::vector<ExactInt> row(std::int64_t n);

 private:
  void grow_to(std::size_t n);  // caller holds mu_

  StirlingKind kind_;
  std::mutex mu_;
  std::vector<std::vector<ExactInt>> rows_;
};

/// [n; k]: permutations of n elements with k cycles.
ExactInt stirling1(std::int64_t n, std::int64_t k);
/// {n; k}: partitions of an n-set into k nonempty blocks.
ExactInt stirling2(std::int64_t n, std::int64_t k);

/// [a; b] on all integers. Zero when a and b have opposite signs, and
/// [a; b] = {-b; -a} when both are <= 0.
ExactInt stirling1_ext(std::int64_t a, std::int64_t b);
/// {a; b} on all integers, the companion duality {a; b} = [-b; -a].
ExactInt stirling2_ext(std::int64_t a, std::int64_t b);

/// Second-order Eulerian number <<n>>_i.
ExactInt eulerian2(std::int64_t n, std::int64_t i);

/// sum_i coeffs[i] * C(x + i, 2 * order).
struct BinomialBasisPoly {
  std::size_t order = 0;
  std::vector<ExactInt> coeffs;

  friend bool operator==(const BinomialBasisPoly&,
                         const BinomialBasisPoly&) = default;
};

/// The degree-2n polynomial in x that agrees with [x; x-n] at every integer.
BinomialBasisPoly stirling1_poly(std::size_t n);

ExactInt poly_eval_binomial_basis(const BinomialBasisPoly& p,
                                  const ExactInt& x);

// Brute-force oracles. These enumerate objects one by one and share no
// code with the recurrences above.

inline constexpr std::int64_t kMaxPartitionOracleN = 12;
inline constexpr std::int64_t kMaxPermutationOracleN = 9;

/// Number of partitions of {0..n-1} into exactly k nonempty blocks.
ExactInt count_set_partitions(std::int64_t n, std::int64_t k);
/// Number of permutations of {0..n-1} with exactly k cycles.
ExactInt count_cycle_perms(std::int64_t n, std::int64_t k);

}  // namespace linkeuler

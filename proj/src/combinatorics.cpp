#include "linkeuler/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace linkeuler {

// --- StirlingTable ---------------------------------------------------------

StirlingTable::StirlingTable(StirlingKind kind) : kind_(kind) {
  rows_.push_back({ExactInt(1)});
}

void StirlingTable::grow_to(std::size_t n) {
  while (rows_.size() <= n) {
    const std::size_t m = rows_.size();  // building row m from row m-1
    const auto& prev = rows_.back();
    std::vector<ExactInt> row(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
      const ExactInt& diag = prev[k - 1];
      const ExactInt same = k < m ? prev[k] : ExactInt(0);
      // [m;k] = [m-1;k-1] + (m-1)[m-1;k],  {m;k} = {m-1;k-1} + k{m-1;k}
      const std::size_t mult = kind_ == StirlingKind::first ? m - 1 : k;
      row[k] = diag + mult * same;
    }
    rows_.push_back(std::move(row));
  }
}

ExactInt StirlingTable::value(std::int64_t n, std::int64_t k) {
  if (n < 0) throw UsageError("stirling: n must be >= 0");
  if (k < 0 || k > n) return 0;
  std::lock_guard lock(mu_);
  grow_to(static_cast<std::size_t>(n));
  return rows_[n][k];
}

std::vector<ExactInt> StirlingTable::row(std::int64_t n) {
  if (n < 0) throw UsageError("stirling: n must be >= 0");
  std::lock_guard lock(mu_);
  grow_to(static_cast<std::size_t>(n));
  return rows_[n];
}

namespace {

StirlingTable& first_kind_table() {
  static StirlingTable table(StirlingKind::first);
  return table;
}

StirlingTable& second_kind_table() {
  static StirlingTable table(StirlingKind::second);
  return table;
}

class EulerianTable {
 public:
  ExactInt value(std::int64_t n, std::int64_t i) {
    if (n < 0) throw UsageError("eulerian2: n must be >= 0");
    if (i < 0 || i >= std::max<std::int64_t>(n, 1)) return 0;
    std::lock_guard lock(mu_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      const std::int64_t m = static_cast<std::int64_t>(rows_.size());
      const auto& prev = rows_.back();
      auto at = [&](std::int64_t j) -> ExactInt {
        return j >= 0 && j < static_cast<std::int64_t>(prev.size()) ? prev[j]
                                                                     : 0;
      };
      std::vector<ExactInt> row(m);
      for (std::int64_t j = 0; j < m; ++j) {
        row[j] = (j + 1) * at(j) + (2 * m - 1 - j) * at(j - 1);
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][i];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<ExactInt>> rows_{{ExactInt(1)}};
};

EulerianTable& eulerian_table() {
  static EulerianTable table;
  return table;
}

}  // namespace

ExactInt stirling1(std::int64_t n, std::int64_t k) {
  return first_kind_table().value(n, k);
}

ExactInt stirling2(std::int64_t n, std::int64_t k) {
  return second_kind_table().value(n, k);
}

ExactInt stirling1_ext(std::int64_t a, std::int64_t b) {
  if ((a < 0) != (b < 0)) return 0;
  if (a >= 0) return stirling1(a, b);
  return stirling2(-b, -a);
}

ExactInt stirling2_ext(std::int64_t a, std::int64_t b) {
  if ((a < 0) != (b < 0)) return 0;
  if (a >= 0) return stirling2(a, b);
  return stirling1(-b, -a);
}

ExactInt eulerian2(std::int64_t n, std::int64_t i) {
  return eulerian_table().value(n, i);
}

// --- binomial-basis polynomial ---------------------------------------------

BinomialBasisPoly stirling1_poly(std::size_t n) {
  BinomialBasisPoly p;
  p.order = n;
  const std::size_t terms = std::max<std::size_t>(n, 1);
  p.coeffs.reserve(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    p.coeffs.push_back(eulerian2(static_cast<std::int64_t>(n),
                                 static_cast<std::int64_t>(i)));
  }
  return p;
}

ExactInt poly_eval_binomial_basis(const BinomialBasisPoly& p,
                                  const ExactInt& x) {
  const auto k = static_cast<std::int64_t>(2 * p.order);
  ExactInt acc = 0;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i].is_zero()) continue;
    acc += p.coeffs[i] * binomial_general(x + static_cast<std::int64_t>(i), k);
  }
  return acc;
}

// --- enumeration oracles ---------------------------------------------------

namespace {

// Walks restricted growth strings a[0..n-1] with a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]); each string is one set partition.
std::uint64_t count_rgs(int pos, int n, int blocks, int k) {
  if (blocks > k) return 0;
  if (k - blocks > n - pos) return 0;
  if (pos == n) return blocks == k ? 1 : 0;
  std::uint64_t total = 0;
  for (int b = 0; b <= blocks; ++b) {
    total += count_rgs(pos + 1, n, b == blocks ? blocks + 1 : blocks, k);
  }
  return total;
}

}  // namespace

ExactInt count_set_partitions(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw UsageError("count_set_partitions: negative argument");
  if (n > kMaxPartitionOracleN) {
    throw OracleScaleError("count_set_partitions: n = " + std::to_string(n) +
                           " exceeds oracle cap " +
                           std::to_string(kMaxPartitionOracleN));
  }
  if (n == 0) return k == 0 ? 1 : 0;
  return count_rgs(0, static_cast<int>(n), 0, static_cast<int>(k));
}

ExactInt count_cycle_perms(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw UsageError("count_cycle_perms: negative argument");
  if (n > kMaxPermutationOracleN) {
    throw OracleScaleError("count_cycle_perms: n = " + std::to_string(n) +
                           " exceeds oracle cap " +
                           std::to_string(kMaxPermutationOracleN));
  }
  std::array<int, kMaxPermutationOracleN> perm{};
  const auto len = static_cast<std::size_t>(n);
  std::iota(perm.begin(), perm.begin() + len, 0);
  std::uint64_t hits = 0;
  do {
    std::array<bool, kMaxPermutationOracleN> seen{};
    std::int64_t cycles = 0;
    for (std::size_t start = 0; start < len; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
        seen[i] = true;
      }
    }
    if (cycles == k) ++hits;
  } while (std::next_permutation(perm.begin(), perm.begin() + len));
  return hits;
}

}  // namespace linkeuler

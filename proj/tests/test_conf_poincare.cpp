#include "linkeuler/conf_poincare.hpp"

#include "linkeuler/combinatorics.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace linkeuler;

TEST_CASE("ModelParams validation") {
  CHECK_NOTHROW(ModelParams(4, 1));
  CHECK_NOTHROW(ModelParams(3, 2));
  CHECK_FALSE(ModelParams(3, 2).theorem_grade());
  CHECK(ModelParams(4, 2).theorem_grade());
  CHECK(ModelParams(5, 1).lattice_step() == 4);
  CHECK_THROWS_AS(ModelParams(2, 1), ParameterError);
  CHECK_THROWS_AS(ModelParams(4, 0), ParameterError);
}

TEST_CASE("conf_poincare") {
  for (std::int64_t dim = 3; dim <= 6; ++dim) {
    CHECK(conf_poincare(0, dim) == IntPolynomial::constant(1));
    CHECK(conf_poincare(1, dim) == IntPolynomial::constant(1));
  }
  CHECK(conf_poincare(2, 4) == IntPolynomial({1, 0, 0, 1}));
  CHECK(conf_poincare(4, 4) == IntPolynomial({1, 0, 0, 6, 0, 0, 11, 0, 0, 6}));
  CHECK_THROWS_AS(conf_poincare(3, 2), ParameterError);
}

TEST_CASE("conf_poincare degree and lattice support") {
  for (std::int64_t dim = 3; dim <= 6; ++dim) {
    for (std::int64_t k = 1; k <= 12; ++k) {
      const auto p = conf_poincare(k, dim);
      CHECK(p.degree() == (k - 1) * (dim - 1));
      const auto c = p.coeffs();
      for (std::size_t d = 0; d < c.size(); ++d) {
        if (d % static_cast<std::size_t>(dim - 1) == 0) {
          CHECK(c[d] > 0);
        } else {
          CHECK(c[d] == 0);
        }
      }
    }
  }
}

TEST_CASE("link_term_poincare") {
  const ModelParams two(4, 2);
  CHECK(link_term_poincare(0, two) == IntPolynomial::constant(1));
  CHECK(link_term_poincare(2, two) == IntPolynomial({1, 0, 0, 6, 0, 0, 11, 0, 0, 6}));
  for (std::int64_t p = 0; p <= 8; ++p) {
    CHECK(link_term_poincare(p, ModelParams(5, 1)) == conf_poincare(p, 5));
  }
  CHECK_THROWS_AS(link_term_poincare(-1, two), UsageError);
}

TEST_CASE("stirling_coefficient_check") {
  CHECK(stirling_coefficient_check(4, 4, 2));
  CHECK(conf_poincare(4, 4).coeff(6) == 11);
  CHECK(stirling_coefficient_check(1, 4, 1));
  CHECK(stirling_coefficient_check(1, 5, 3));
  CHECK(stirling_coefficient_check(6, 5, 3));
  CHECK(conf_poincare(6, 5).coeff(12) == 225);
  for (std::int64_t dim = 3; dim <= 5; ++dim) {
    for (std::int64_t k = 0; k <= 12; ++k) {
      for (std::int64_t j = 0; j <= k; ++j) {
        CHECK(stirling_coefficient_check(k, dim, j));
        // independent route: e_j(1..k-1) by subset enumeration
        CHECK(conf_poincare(k, dim).coeff(static_cast<std::size_t>((dim - 1) * j)) ==
              oracle::elementary_symmetric(std::max<std::int64_t>(k - 1, 0), j));
      }
    }
  }
}

#include "doctest.h"

#include "affsl2/closed_forms.hpp"
#include "affsl2/cohomology.hpp"
#include "affsl2/errors.hpp"
#include "affsl2/numbers.hpp"
#include "affsl2/weyl.hpp"
#include "oracles.hpp"

using namespace affsl2;

namespace {
GradedPoly A(std::uint32_t i, std::uint32_t j, Rational c = 1) { return GradedPoly::monomial({i, j}, c); }
}  // namespace

TEST_CASE("Q sums") {
  CohomologyTable t;
  CHECK(t.Q(0, 3, 2) == GradedPoly(1));
  CHECK(t.Q(0, 3, -1) == GradedPoly(1));
  CHECK(t.Q(2, 3, -1).is_zero());
  CHECK(t.Q(1, 1, 1) == A(1, 0, 2) + A(0, 1, 2));
  CHECK(t.Q(2, 1, 0) == A(2, 0));
  for (std::int64_t d = 0; d <= 4; ++d)
    for (std::int64_t i = 1; i <= 4; ++i)
      for (std::int64_t j = 0; j <= 6; ++j) CHECK(t.Q(d, i, j) == oracle::Q(d, i, j));
  CHECK(t.q_memo_size() > 0);
  CHECK(q_graded(3) == A(1, 0, 4) + A(0, 1, 2));
}

TEST_CASE("Chevalley row and top class") {
  CohomologyTable t;
  for (std::int64_t m = 0; m <= 8; ++m) {
    CHECK(t.c(1, m, m) == q_graded(m));
    CHECK(t.c(1, m, m + 1) == GradedPoly(static_cast<long>(m + 1)));
  }
  for (std::int64_t n = 0; n <= 6; ++n)
    for (std::int64_t m = 0; m <= 6; ++m) CHECK(t.c(n, m, n + m) == GradedPoly(Rational(binomial(n + m, n))));
  CHECK(t.c(2, 2, 3) == A(1, 0, 6) + A(0, 1, 6));
  CHECK(t.c(2, 2, 2) == A(1, 1) + A(0, 2, 2));
  CHECK(t.c(0, 4, 4) == GradedPoly(1));
  CHECK(t.c(0, 4, 5).is_zero());
  CHECK(t.c(2, 5, 4).is_zero());
  CHECK(t.c(2, 5, 8).is_zero());
}

TEST_CASE("degrees, integrality and symmetry") {
  CohomologyTable t;
  for (std::int64_t n = 0; n <= 7; ++n)
    for (std::int64_t m = 0; m <= 7; ++m)
      for (std::int64_t k = std::max(n, m); k <= n + m; ++k) {
        GradedPoly v = t.c(n, m, k);
        CHECK(!v.is_zero());
        CHECK(v.is_homogeneous(static_cast<std::uint32_t>(n + m - k)));
        CHECK(v.has_integer_coefficients());
        CHECK(v == t.c(m, n, k));
      }
}

TEST_CASE("products of powers of the divisor class") {
  // e_1^a * e_1^b = e_1^(a+b), expanded through the general structure constants.
  CohomologyTable t;
  for (std::int64_t a = 0; a <= 5; ++a)
    for (std::int64_t b = 0; b <= 5; ++b) {
      auto pa = oracle::e1_power(a);
      auto pb = oracle::e1_power(b);
      auto pab = oracle::e1_power(a + b);
      for (std::int64_t k = 0; k <= a + b; ++k) {
        GradedPoly lhs;
        for (std::int64_t i = 0; i <= a; ++i)
          for (std::int64_t j = 0; j <= b; ++j)
            if (!pa[static_cast<std::size_t>(i)].is_zero() && !pb[static_cast<std::size_t>(j)].is_zero())
              lhs += pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)] * t.c(i, j, k);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(k);
        CHECK(lhs == pab[static_cast<std::size_t>(k)]);
      }
    }
}

TEST_CASE("Euler class identities") {
  CohomologyTable t;
  CHECK(euler_class_identities(t, 1, 1));
  CHECK(euler_class_identities(t, 2, 1));
  CHECK(euler_class_identities(t, 3, 2));
  CHECK(euler_class_identities(t, 6, 6));
}

TEST_CASE("seeded entries") {
  CohomologyTable a;
  GradedPoly v = a.c(3, 4, 5);
  CohomologyTable b;
  b.seed(EntryKey{3, 4, 5}, CEntry{v, Provenance::recursion});
  CHECK(b.entries().size() == 1);
  CHECK(b.c(4, 3, 5) == v);
}

#include "doctest.h"

#include "affsl2/errors.hpp"
#include "affsl2/localization.hpp"
#include "affsl2/ls_paths.hpp"
#include "affsl2/weyl.hpp"
#include "oracles.hpp"

using namespace affsl2;

namespace {
LaurentPoly E(std::int64_t a, std::int64_t b, long c = 1) { return LaurentPoly::monomial({a, b}, c); }
}  // namespace

TEST_CASE("base cases by hand") {
  for (std::int64_t m = 0; m < 6; ++m) CHECK(d_base(0, m) == LaurentPoly(1));
  CHECK(d_base(1, 2) == LaurentPoly(1) - E(1, 2));
  CHECK(d_base(2, 2) == LaurentPoly::exp_minus_one({0, 1}) * LaurentPoly::exp_minus_one({1, 2}));
  CHECK(d_base(1, 3) == LaurentPoly(1) - E(4, 2));
  CHECK(d_base(1, 1) == LaurentPoly(1) - E(1, 0));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(d_base(3, 2), BadRange);
  CHECK_THROWS_AS(d_base(-1, 2), BadRange);
  CHECK_THROWS_AS(d_base_bruteforce(3, 2), BadRange);
  CHECK_THROWS_AS(d_base_bruteforce(1, 17), TooLarge);
}

TEST_CASE("dynamic programme agrees with subset enumeration") {
  for (std::int64_t m = 0; m <= 10; ++m)
    for (std::int64_t n = 0; n <= m; ++n) {
      LaurentPoly dp = d_base(n, m);
      CHECK(dp == d_base_bruteforce(n, m));
      CHECK(dp == oracle::d_base(n, m));
    }
}

TEST_CASE("divisor diagonal agrees with localization") {
  for (std::int64_t m = 1; m <= 12; ++m) {
    CHECK(d_base(1, m) == d_divisor(m, m));
    CHECK(d_base(1, m) == LaurentPoly(1) - LaurentPoly::monomial(q(m)));
  }
}

TEST_CASE("base cases vanish at one and have the bottom degree") {
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t n = 1; n <= m; ++n) {
      LaurentPoly v = d_base(n, m);
      CHECK(eval_at_one(v) == 0);
      CHECK(lowest_graded_part(v).is_homogeneous(static_cast<std::uint32_t>(n)));
    }
}

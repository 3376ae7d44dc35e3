#include "doctest.h"

#include "affsl2/errors.hpp"
#include "affsl2/ls_paths.hpp"
#include "affsl2/weyl.hpp"
#include "oracles.hpp"

using namespace affsl2;

namespace {
LaurentPoly E(std::int64_t a, std::int64_t b, long c = 1) { return LaurentPoly::monomial({a, b}, c); }
}  // namespace

TEST_CASE("path enumeration small cases") {
  auto p21 = enumerate_paths(2, 1);
  REQUIRE(p21.size() == 1);
  CHECK(p21[0].indices == std::vector<std::int64_t>{1});
  auto p31 = enumerate_paths(3, 1);
  REQUIRE(p31.size() == 1);
  CHECK(p31[0].indices == std::vector<std::int64_t>{1, 1});
  for (std::int64_t m = 0; m < 6; ++m) {
    auto trivial = enumerate_paths(m, m);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].indices.empty());
  }
  auto p42 = enumerate_paths(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0].index_at(4) == 1);
  CHECK(p42[0].index_at(3) == 1);
  CHECK(p42[1].index_at(4) == 1);
  CHECK(p42[1].index_at(3) == 2);
  CHECK(p42[2].index_at(4) == 2);
  CHECK(p42[2].index_at(3) == 2);
  CHECK(enumerate_paths(3, 0).empty());
  CHECK_THROWS_AS(enumerate_paths(2, 3), BadRange);
  CHECK_THROWS_AS(enumerate_paths(2, -1), BadRange);
}

TEST_CASE("path enumeration matches brute force") {
  for (std::int64_t l = 0; l <= 9; ++l)
    for (std::int64_t m = 0; m <= l; ++m) {
      auto paths = enumerate_paths(l, m);
      auto brute = oracle::chains(l, m);
      REQUIRE(paths.size() == brute.size());
      for (std::size_t x = 0; x < paths.size(); ++x) {
        CHECK(paths[x].indices == brute[x]);
        CHECK(path_weight_chi(paths[x]) == oracle::chi(l, brute[x]));
      }
    }
}

TEST_CASE("path weights") {
  CHECK(path_weight_chi(enumerate_paths(2, 1)[0]) == Weight{0, 1});
  CHECK(path_weight_chi(enumerate_paths(3, 1)[0]) == Weight{1, 1});
  CHECK(path_weight_chi(enumerate_paths(5, 5)[0]) == Weight{0, 0});
}

TEST_CASE("Chevalley coefficients") {
  for (std::int64_t m = 0; m < 8; ++m) CHECK(chevalley_a(m, m) == LaurentPoly::monomial(q(m)));
  CHECK(chevalley_a(2, 1) == -(E(1, 1) + E(1, 0)));
  CHECK(chevalley_a(3, 1) == E(2, 1) + E(1, 1));
  CHECK_THROWS_AS(chevalley_a(1, 2), BadRange);
}

TEST_CASE("divisor row") {
  CHECK(d_divisor(1, 1) == LaurentPoly(1) - E(1, 0));
  CHECK(d_divisor(2, 1) == E(1, 0) + E(1, 1));
  CHECK(d_divisor(3, 1) == -E(2, 1) - E(1, 1));
  CHECK(d_divisor(1, 0) == LaurentPoly(1));
  CHECK(d_divisor(0, 0).is_zero());
  CHECK(d_divisor(5, 0).is_zero());
  CHECK(d_divisor(2, 3).is_zero());
  for (std::int64_t m = 0; m <= 8; ++m)
    for (std::int64_t k = 0; k <= 10; ++k) CHECK(d_divisor(k, m) == oracle::d_divisor(k, m));
}

// Randomized invariants. The seed is fixed so failures reproduce; set
// AFFSL2_SEED to explore other streams.
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "affsl2/cache.hpp"
#include "affsl2/closed_forms.hpp"
#include "affsl2/errors.hpp"
#include "affsl2/graded_poly.hpp"
#include "affsl2/laurent_poly.hpp"
#include "affsl2/ordinary.hpp"
#include "affsl2/tables.hpp"
#include "affsl2/text_format.hpp"
#include "affsl2/weyl.hpp"
#include "oracles.hpp"

using namespace affsl2;

namespace {

std::uint64_t seed() {
  if (char const* s = std::getenv("AFFSL2_SEED")) return std::strtoull(s, nullptr, 10);
  return 20241015;
}

struct Gen {
  std::mt19937_64 rng{seed()};
  std::int64_t pick(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }

  LaurentPoly laurent(int max_terms, std::int64_t spread = 5) {
    LaurentPoly p;
    for (int t = 0, n = static_cast<int>(pick(0, max_terms)); t < n; ++t)
      p.add_term({pick(-spread, spread), pick(-spread, spread)}, Integer(static_cast<long>(pick(-9, 9))));
    return p;
  }
  LaurentPoly nonzero(int max_terms) {
    LaurentPoly p;
    while (p.is_zero()) p = laurent(max_terms);
    return p;
  }
  GradedPoly graded(int max_terms) {
    GradedPoly p;
    for (int t = 0, n = static_cast<int>(pick(0, max_terms)); t < n; ++t) {
      Rational c(static_cast<long>(pick(-9, 9)), static_cast<long>(pick(1, 5)));
      c.canonicalize();
      p.add_term({static_cast<std::uint32_t>(pick(0, 4)), static_cast<std::uint32_t>(pick(0, 4))}, c);
    }
    return p;
  }
};

}  // namespace

TEST_CASE("Laurent ring axioms") {
  Gen g;
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = g.laurent(12), b = g.laurent(12), c = g.laurent(12);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly(1) == a);
  }
}

TEST_CASE("exact division inverts multiplication for every divisor shape") {
  Gen g;
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = g.laurent(10);
    LaurentPoly d;
    switch (trial % 3) {
      case 0:
        d = LaurentPoly::monomial({g.pick(-4, 4), g.pick(-4, 4)}, Integer(static_cast<long>(g.pick(1, 5))));
        break;
      case 1: {
        Weight s{g.pick(-3, 3), g.pick(-3, 3)};
        Weight gamma{g.pick(-3, 3), g.pick(-3, 3)};
        if (gamma.is_zero()) gamma = {1, 2};
        d = LaurentPoly::monomial(s + gamma, Integer(static_cast<long>(g.pick(1, 4)))) +
            LaurentPoly::monomial(s, Integer(static_cast<long>(g.pick(-4, -1))));
        break;
      }
      default:
        d = g.nonzero(6);
    }
    CHECK(exact_div(a * d, d) == a);
  }
}

TEST_CASE("a nonzero remainder is always detected") {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly d = LaurentPoly::monomial({2, 1}) - LaurentPoly(1);
    LaurentPoly a = g.laurent(8);
    LaurentPoly r = LaurentPoly::monomial({g.pick(-3, 3), g.pick(-3, 3)}, Integer(static_cast<long>(g.pick(1, 3))));
    CHECK_THROWS_AS(exact_div(a * d + r, d), NotDivisible);
  }
}

TEST_CASE("evaluation at one and lowest graded part are multiplicative") {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = g.nonzero(8), b = g.nonzero(8);
    CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
    CHECK(eval_at_one(a - b) == eval_at_one(a) - eval_at_one(b));
    if ((a * b).is_zero()) continue;
    CHECK(lowest_graded_part(a * b) == lowest_graded_part(a) * lowest_graded_part(b));
  }
}

TEST_CASE("graded ring axioms and degree additivity") {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    GradedPoly a = g.graded(8), b = g.graded(8), c = g.graded(8);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    auto da = static_cast<std::uint32_t>(g.pick(0, 5)), db = static_cast<std::uint32_t>(g.pick(0, 5));
    GradedPoly ha = a.component(da), hb = b.component(db);
    CHECK((ha * hb).is_homogeneous(da + db));
  }
}

TEST_CASE("canonical text round trips") {
  Gen g;
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = g.laurent(15, 40);
    GradedPoly b = g.graded(10);
    CHECK(parse_laurent(to_canonical(a)) == a);
    CHECK(parse_graded(to_canonical(b)) == b);
    CHECK(to_canonical(parse_laurent(to_canonical(a))) == to_canonical(a));
  }
}

TEST_CASE("Demazure product is associative and matches the alcove model") {
  Gen g;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> u, v;
    std::vector<int> all;
    for (auto* w : {&u, &v})
      for (int i = 0, n = static_cast<int>(g.pick(0, 14)); i < n; ++i) {
        auto l = static_cast<int>(g.pick(0, 1));
        w->push_back(static_cast<Letter>(l));
        all.push_back(l);
      }
    std::vector<Letter> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    std::vector<Letter> split = demazure_product(u).letters;
    auto dv = demazure_product(v).letters;
    split.insert(split.end(), dv.begin(), dv.end());
    CHECK(demazure_product(uv) == demazure_product(split));
    CHECK(static_cast<std::int64_t>(demazure_product(uv).length()) == oracle::demazure(all).length());
  }
}

TEST_CASE("equivariant K-theory: symmetry and associativity at random indices") {
  Gen g;
  Tables t;
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t a = g.pick(0, 3), b = g.pick(0, 3), c = g.pick(0, 3);
    std::int64_t k = g.pick(0, 8);
    CHECK(t.k.d(a, b, k) == t.k.d(b, a, k));
    LaurentPoly lhs, rhs;
    for (std::int64_t i = 0; i <= k; ++i) lhs += t.k.d(a, b, i) * t.k.d(i, c, k);
    for (std::int64_t j = 0; j <= k; ++j) rhs += t.k.d(b, c, j) * t.k.d(a, j, k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cohomology: associativity at random indices") {
  Gen g;
  Tables t;
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t a = g.pick(0, 4), b = g.pick(0, 4), c = g.pick(0, 4);
    std::int64_t k = g.pick(0, a + b + c);
    GradedPoly lhs, rhs;
    for (std::int64_t i = 0; i <= k; ++i) lhs += t.h.c(a, b, i) * t.h.c(i, c, k);
    for (std::int64_t j = 0; j <= k; ++j) rhs += t.h.c(b, c, j) * t.h.c(a, j, k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ordinary constants at random indices") {
  Gen g;
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t n = g.pick(1, 12), m = g.pick(1, 12), off = g.pick(0, 12);
    CHECK(d_ordinary_closed(n, m, off) == oracle::d_ordinary(n, m, n + m + off));
    CHECK(d_ordinary_closed(n, m, off) == d_ordinary_closed(m, n, off));
    CHECK(b_ordinary_closed(n, m, off) == oracle::b_ordinary(n, m, n + m + off));
  }
}

TEST_CASE("cache round trip after random queries") {
  Gen g;
  Tables t;
  for (int trial = 0; trial < 30; ++trial) {
    std::int64_t n = g.pick(0, 4), m = g.pick(0, 4), k = g.pick(0, 8);
    t.k.b(n, m, k);
    t.h.c(n, m, k);
  }
  std::string text = cache_serialize(t);
  Tables back;
  cache_merge(back, text);
  CHECK(cache_serialize(back) == text);
}

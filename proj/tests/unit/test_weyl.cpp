#include "doctest.h"

#include <vector>

#include "affsl2/errors.hpp"
#include "affsl2/weyl.hpp"
#include "oracles.hpp"

using namespace affsl2;
using enum affsl2::Letter;

TEST_CASE("reduced words w_n") {
  CHECK(reduced_word(0).letters.empty());
  CHECK(reduced_word(3).letters == std::vector<Letter>{s0, s1, s0});
  CHECK(reduced_word(2).letters == std::vector<Letter>{s1, s0});
  CHECK(reduced_word(1).letters == std::vector<Letter>{s0});
  for (std::size_t n = 1; n < 30; ++n) {
    WeylWord w = reduced_word(n);
    CHECK(w.is_reduced());
    CHECK(w.at(n) == s0);
    for (std::size_t l = 1; l <= n; ++l) CHECK(static_cast<std::size_t>(w.at(l)) == (n - l) % 2);
  }
  CHECK(!WeylWord{{s0, s0}}.is_reduced());
}

TEST_CASE("Demazure product") {
  std::vector<Letter> a{s0, s0};
  CHECK(demazure_product(a).letters == std::vector<Letter>{s0});
  std::vector<Letter> b{s0, s1, s0};
  CHECK(demazure_product(b) == reduced_word(3));
  std::vector<Letter> c{s0, s0, s1, s1, s0};
  CHECK(demazure_product(c) == reduced_word(3));
  CHECK(demazure_product(std::vector<Letter>{}).letters.empty());
}

TEST_CASE("Demazure product agrees with the alcove model") {
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<Letter> word;
    std::vector<int> ints;
    for (int bit = 0; bit < 10; ++bit) {
      word.push_back(static_cast<Letter>(mask >> bit & 1));
      ints.push_back(static_cast<int>(mask >> bit & 1));
    }
    WeylWord d = demazure_product(word);
    oracle::Affine g = oracle::demazure(ints);
    std::vector<int> dl;
    for (Letter l : d.letters) dl.push_back(static_cast<int>(l));
    oracle::Affine h = oracle::demazure(dl);
    CHECK(g == h);
    CHECK(static_cast<std::int64_t>(d.length()) == g.length());
  }
}

TEST_CASE("Demazure state folding") {
  DemazureState s;
  for (Letter l : {s0, s0, s1, s1, s0}) s = s.append(l);
  CHECK(s.collapsed_len == 3);
  CHECK(s.last_letter == s0);
  CHECK(DemazureState{}.append(s1).append(s1).collapsed_len == 1);
}

TEST_CASE("beta weights") {
  CHECK(beta(3, 2) == Weight{2, 1});
  CHECK(beta(2, 1) == Weight{0, 1});
  CHECK(beta(3, 1) == Weight{1, 0});
  for (std::int64_t m = 1; m < 12; ++m)
    for (std::int64_t l = 1; l <= m; ++l) CHECK(beta(m, l) == oracle::beta(m, l));
  CHECK_THROWS_AS(beta(3, 0), OutOfRange);
  CHECK_THROWS_AS(beta(3, 4), OutOfRange);
}

TEST_CASE("q weights") {
  CHECK(q(0) == Weight{0, 0});
  CHECK(q(1) == Weight{1, 0});
  CHECK(q(2) == Weight{1, 2});
  CHECK(q(3) == Weight{4, 2});
  for (std::int64_t m = 0; m < 60; ++m) CHECK(q(m) == oracle::q(m));
}

TEST_CASE("fundamental weight orbit") {
  CHECK(w_lambda0(0) == Weight{0, 0});
  CHECK(w_lambda0(1) == Weight{-1, 0});
  CHECK(w_lambda0(2) == Weight{-1, -2});
  CHECK(w_lambda0_diff(1) == Weight{1, 0});
  CHECK(w_lambda0_diff(2) == Weight{0, 2});
  CHECK(w_lambda0_diff(4) == Weight{0, 4});
  CHECK_THROWS_AS(w_lambda0_diff(0), OutOfRange);
}

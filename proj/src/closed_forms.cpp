#include "affsl2/closed_forms.hpp"

#include <string>

#include "affsl2/errors.hpp"
#include "affsl2/numbers.hpp"

namespace affsl2 {
namespace {

Rational R(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }
Rational fact(std::int64_t n) { return Rational(factorial(static_cast<unsigned long>(n))); }
bool even(std::int64_t v) { return v % 2 == 0; }

GradedPoly form(Rational const& c0, Rational const& c1) {
  GradedPoly p;
  p.add_term({1, 0}, c0);
  p.add_term({0, 1}, c1);
  return p;
}

}  // namespace

GradedPoly Q1_closed(std::int64_t i, std::int64_t j) {
  Rational const twelfth(1, 12);
  // Shared cubic appearing in the (even, even) and (odd, even) cases.
  std::int64_t const cubic = 6 * i * j + 3 * i * i * j + 3 * j * j + 3 * i * j * j + j * j * j;
  if (even(i) && even(j))
    return form(twelfth * R(3 * i * i + 2 * j + cubic), twelfth * R(6 * i + 3 * i * i + 2 * j + cubic));
  if (!even(i) && !even(j)) {
    Rational c = twelfth * R((1 + j) * (3 * i + 3 * i * i + 2 * j + 3 * i * j + j * j));
    return form(c, c);
  }
  if (even(i))  // j odd
    return form(twelfth * R((1 + j) * (3 + 3 * i + 3 * i * i + 2 * j + 3 * i * j + j * j)),
                twelfth * R((1 + j) * (-3 + 3 * i + 3 * i * i + 2 * j + 3 * i * j + j * j)));
  return form(twelfth * R(3 + 6 * i + 3 * i * i + 5 * j + cubic), twelfth * R(-3 + 3 * i * i - j + cubic));
}

GradedPoly sumq_closed(std::int64_t k) {
  Rational const twelfth(1, 12);
  if (even(k)) {
    Rational c = twelfth * R(k * (k + 1) * (k + 2));
    return form(c, c);
  }
  return form(twelfth * R((k + 1) * (3 + 2 * k + k * k)), twelfth * R((k - 1) * (k + 1) * (k + 3)));
}

GradedPoly c_top_minus_1(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw BadRange("c_top_minus_1: need n, m >= 1");
  Rational const quarter(1, 4);
  if (even(n) && even(m)) {
    Rational c = quarter * fact(n + m) / (fact(n - 1) * fact(m - 1));
    return form(c, c);
  }
  if (!even(n) && !even(m)) {
    Rational c = quarter * fact(n + m) / (fact(n) * fact(m));
    return form(c * R(1 + n * m), c * R(-1 + n * m));
  }
  if (even(n)) {  // m odd
    Rational c = quarter * fact(n + m - 1) / (fact(n - 1) * fact(m));
    return form(c * R(-1 + n * m + m * m), c * R(1 + n * m + m * m));
  }
  Rational c = quarter * fact(n + m - 1) / (fact(n) * fact(m - 1));
  return form(c * R(-1 + n * m + n * n), c * R(1 + n * m + n * n));
}

GradedPoly c_top_minus_2(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw BadRange("c_top_minus_2: need n, m >= 1");
  if (n < 2 || m < 2) return {};
  Rational const eighth(1, 8);
  Rational const quarter(1, 4);
  Rational const half(1, 2);
  std::int64_t const p = n * m * m + n * n * m;
  Rational a;
  Rational b0;
  Rational b1;
  Rational b2;
  if (even(n) && even(m)) {
    a = eighth * fact(n + m) / (fact(n - 1) * fact(m - 1)) / R(n + m - 1);
    b0 = quarter * R(p - n * n - m * m - 3 * n * m + 4);
    b1 = half * R(p - n * n - m * m - 3 * n * m + 2 * n + 2 * m - 2);
    b2 = quarter * R(p - n * n - m * m - 3 * n * m + 4 * n + 4 * m - 4);
  } else if (!even(n) && !even(m)) {
    a = eighth * fact(n + m) / (fact(n) * fact(m)) * R((n - 1) * (m - 1)) / R(n + m - 1);
    b0 = quarter * R(p - n * m - 1);
    b1 = half * R(p - n * m - 1);
    b2 = quarter * R(p - n * m + 3);
  } else if (!even(n)) {  // m even
    a = eighth * fact(n + m - 1) / (fact(n) * fact(m - 1)) * R(n - 1);
    b0 = quarter * R(p - n * n - n * m + 2 * n + 3);
    b1 = half * R(p - n * n - n * m - 1);
    b2 = quarter * R(p - n * n - n * m - 2 * n - 1);
  } else {  // n even, m odd
    a = eighth * fact(n + m - 1) / (fact(n - 1) * fact(m)) * R(m - 1);
    b0 = quarter * R(p - m * m - n * m + 2 * m + 3);
    b1 = half * R(p - m * m - n * m - 1);
    b2 = quarter * R(p - m * m - n * m - 2 * m - 1);
  }
  GradedPoly out;
  out.add_term({2, 0}, a * b0);
  out.add_term({1, 1}, a * b1);
  out.add_term({0, 2}, a * b2);
  return out;
}

GradedPoly c_bottom(std::int64_t n, std::int64_t m) {
  if (n < 0 || n > m) throw BadRange("c_bottom: need 0 <= n <= m");
  bool const same_parity = even(n) == even(m);
  std::int64_t const shift = same_parity ? (m - n) / 2 : (m - n + 1) / 2;
  std::int64_t const top = same_parity ? (m + n) / 2 : (m + n - 1) / 2;
  // alpha_0 leads when m is odd; alpha_1 leads when m is even.
  bool const alpha0_ahead = !even(m);
  GradedPoly out(Rational(binomial(top, n)));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t const lo = shift + i;
    out *= alpha0_ahead ? form(R(lo + 1), R(lo)) : form(R(lo), R(lo + 1));
  }
  return out;
}

}  // namespace affsl2

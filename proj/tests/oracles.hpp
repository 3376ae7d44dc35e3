// Slow reference implementations used only by the tests. None of them share
// code paths with the library beyond the basic polynomial types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "affsl2/graded_poly.hpp"
#include "affsl2/laurent_poly.hpp"
#include "affsl2/numbers.hpp"
#include "affsl2/weight.hpp"

namespace oracle {

using i64 = std::int64_t;
using affsl2::GradedPoly;
using affsl2::Integer;
using affsl2::LaurentPoly;
using affsl2::Rational;
using affsl2::Weight;

inline i64 floor_div(i64 a, i64 b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// q_m straight from its definition with ceil/floor.
inline Weight q(i64 m) {
  i64 c = floor_div(m + 1, 2);
  i64 f = floor_div(m, 2);
  return {c * c, f * f + f};
}

// The infinite dihedral group acting on the line: s0 is x -> -x and s1 is
// x -> 2 - x. An element is x -> sign*x + shift.
struct Affine {
  i64 sign = 1;
  i64 shift = 0;
  i64 apply(i64 x) const { return sign * x + shift; }
  Affine then_right(int letter) const {  // this * s_letter
    i64 c = letter == 0 ? 0 : 2;
    return {-sign, sign * c + shift};
  }
  // Number of walls between the alcove (0,1) and its image.
  i64 length() const {
    i64 lo = std::min(apply(0), apply(1));
    return lo >= 0 ? lo : -lo;
  }
  bool operator==(Affine const&) const = default;
};

inline Affine demazure(std::vector<int> const& word) {
  Affine g;
  for (int l : word) {
    Affine h = g.then_right(l);
    if (h.length() > g.length()) g = h;
  }
  return g;
}

// w_n: alternating, ending in s0; letter at 1-based position l is (n - l) mod 2.
inline std::vector<int> w(i64 n) {
  std::vector<int> out;
  for (i64 l = 1; l <= n; ++l) out.push_back(static_cast<int>((n - l) % 2));
  return out;
}

inline Weight beta(i64 m, i64 l) { return m % 2 != 0 ? Weight{l, l - 1} : Weight{l - 1, l}; }

// (-1)^n sum over subsets of w_m whose Demazure product is w_n.
inline LaurentPoly d_base(i64 n, i64 m) {
  auto word = w(m);
  Affine target = demazure(w(n));
  LaurentPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> sub;
    LaurentPoly prod(1);
    for (i64 l = 1; l <= m; ++l)
      if (mask >> (l - 1) & 1) {
        sub.push_back(word[static_cast<std::size_t>(l - 1)]);
        prod *= LaurentPoly::exp_minus_one(beta(m, l));
      }
    if (demazure(sub) == target) total += prod;
  }
  return n % 2 != 0 ? -total : total;
}

// Every tuple (i_l, ..., i_{m+1}) in [1, m]^(l-m), filtered by the chain rule.
inline std::vector<std::vector<i64>> chains(i64 l, i64 m) {
  std::vector<std::vector<i64>> out;
  if (l == m) return {{}};
  if (m == 0) return out;
  std::vector<i64> t(static_cast<std::size_t>(l - m), 1);
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x + 1 < t.size(); ++x) ok = ok && t[x] <= t[x + 1];
    if (ok) out.push_back(t);
    std::size_t pos = t.size();
    while (pos > 0 && t[pos - 1] == m) t[--pos] = 1;
    if (pos == 0) break;
    ++t[pos - 1];
  }
  return out;
}

// chi of a chain: entries at odd j go to alpha_0, even j to alpha_1, where the
// tuple starts at j = l.
inline Weight chi(i64 l, std::vector<i64> const& t) {
  Weight w;
  for (std::size_t x = 0; x < t.size(); ++x) {
    i64 j = l - static_cast<i64>(x);
    if (j % 2 != 0)
      w.a0 += t[x];
    else
      w.a1 += t[x];
  }
  return w;
}

inline LaurentPoly d_divisor(i64 k, i64 m) {
  if (k < m) return {};
  LaurentPoly a;
  for (i64 l : {k, k - 1})
    if (l >= m)
      for (auto const& t : chains(l, m)) a += LaurentPoly::monomial(q(m) + chi(l, t));
  if ((k + m) % 2 != 0) a = -a;
  return k == m ? LaurentPoly(1) - a : -a;
}

inline GradedPoly lin(Weight const& w) {
  GradedPoly p;
  p.add_term({1, 0}, w.a0);
  p.add_term({0, 1}, w.a1);
  return p;
}

inline GradedPoly Q(i64 d, i64 i, i64 j) {
  GradedPoly total;
  std::function<void(i64, i64, GradedPoly const&)> rec = [&](i64 left, i64 from, GradedPoly const& acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (i64 v = from; v <= i + j; ++v) rec(left - 1, v, acc * lin(q(v)));
  };
  rec(d, i, GradedPoly(1));
  return total;
}

inline GradedPoly sum_q(i64 from, i64 to) {
  GradedPoly s;
  for (i64 v = from; v <= to; ++v) s += lin(q(v));
  return s;
}

inline Integer fact(i64 n) {
  Integer r = 1;
  for (i64 i = 2; i <= n; ++i) r *= i;
  return r;
}

// Ordinary constants evaluated in rational arithmetic from the factorial form.
inline Integer d_ordinary(i64 n, i64 m, i64 k) {
  i64 off = k - n - m;
  if (off < 0 || n == 0 || m == 0) return (n == 0 && k == m) || (m == 0 && k == n) ? 1 : 0;
  Rational r(fact(n + m + off - 1), fact(n - 1) * fact(m - 1) * fact(off));
  r *= Rational(n + m + 2 * off, (n + off) * (m + off));
  r.canonicalize();
  if (off % 2 != 0) r = -r;
  return r.get_num();
}

inline Integer b_ordinary(i64 n, i64 m, i64 k) {
  i64 off = k - n - m;
  if (off < 0) return 0;
  Integer v = fact(k) / (fact(n) * fact(m) * fact(off));
  return off % 2 != 0 ? Integer(-v) : v;
}

// Cohomology Chevalley rule: e_1 * e_j = q_j e_j + (j+1) e_{j+1}. Returns
// e_1^n as coefficients over the Schubert basis.
inline std::vector<GradedPoly> e1_power(i64 n) {
  std::vector<GradedPoly> v(static_cast<std::size_t>(n + 2));
  v[0] = GradedPoly(1);
  for (i64 step = 0; step < n; ++step) {
    std::vector<GradedPoly> next(v.size());
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      next[j] += v[j] * lin(q(static_cast<i64>(j)));
      next[j + 1] += v[j] * GradedPoly(static_cast<long>(j + 1));
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace oracle

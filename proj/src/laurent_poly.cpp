#include "affsl2/laurent_poly.hpp"

#include <algorithm>
#include <string>

#include "affsl2/errors.hpp"

namespace affsl2 {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Position of w inside its coset w + Z*gamma; gamma is lexicographically
// positive, so its first nonzero coordinate is positive.
std::int64_t coset_index(Weight const& w, Weight const& gamma) {
  return gamma.a0 != 0 ? floor_div(w.a0, gamma.a0) : floor_div(w.a1, gamma.a1);
}

LaurentPoly divide_by_monomial(LaurentPoly const& p, Weight const& w, Integer const& c) {
  LaurentPoly q;
  for (auto const& [e, a] : p.terms()) {
    if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t()))
      throw NotDivisible("coefficient not divisible by monomial divisor");
    q.add_term(e - w, a / c);
  }
  return q;
}

// d = v*e^mu + u*e^(mu+gamma). Within each coset of Z*gamma the dividend is
// a Laurent polynomial in t = e^gamma, divided by (v + u*t) from the bottom.
LaurentPoly divide_by_binomial(LaurentPoly const& p, LaurentPoly const& d) {
  auto lo = d.terms().begin();
  auto hi = std::next(lo);
  Weight const mu = lo->first;
  Weight const gamma = hi->first - mu;
  Integer const& v = lo->second;
  Integer const& u = hi->second;

  std::map<Weight, std::map<std::int64_t, Integer>> cosets;
  for (auto const& [w, c] : p.terms()) {
    Weight const e = w - mu;
    std::int64_t s = coset_index(e, gamma);
    cosets[e - s * gamma].emplace(s, c);
  }

  LaurentPoly q;
  for (auto const& [rep, coeffs] : cosets) {
    std::int64_t const first = coeffs.begin()->first;
    std::int64_t const last = coeffs.rbegin()->first;
    Integer prev = 0;
    Integer num;
    for (std::int64_t s = first; s < last; ++s) {
      auto it = coeffs.find(s);
      num = (it == coeffs.end() ? Integer(0) : it->second) - u * prev;
      if (!mpz_divisible_p(num.get_mpz_t(), v.get_mpz_t()))
        throw NotDivisible("binomial division leaves a remainder");
      prev = num / v;
      q.add_term(rep + s * gamma, prev);
    }
    if (coeffs.rbegin()->second != u * prev) throw NotDivisible("binomial division leaves a remainder");
  }
  return q;
}

struct Box {
  std::int64_t lo0, hi0, lo1, hi1;
};

Box support_box(LaurentPoly const& p) {
  Box b{INT64_MAX, INT64_MIN, INT64_MAX, INT64_MIN};
  for (auto const& [w, c] : p.terms()) {
    b.lo0 = std::min(b.lo0, w.a0);
    b.hi0 = std::max(b.hi0, w.a0);
    b.lo1 = std::min(b.lo1, w.a1);
    b.hi1 = std::max(b.hi1, w.a1);
  }
  return b;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Weight{}, Integer(c));
}

LaurentPoly::LaurentPoly(Integer const& c) {
  if (c != 0) terms_.emplace(Weight{}, c);
}

LaurentPoly LaurentPoly::monomial(Weight const& w, Integer const& c) {
  LaurentPoly p;
  p.add_term(w, c);
  return p;
}

LaurentPoly LaurentPoly::exp_minus_one(Weight const& w) {
  LaurentPoly p = monomial(w);
  p.add_term(Weight{}, -1);
  return p;
}

Integer LaurentPoly::coeff(Weight const& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(Weight const& w, Integer const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(Weight const& by) const {
  LaurentPoly r;
  for (auto const& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w + by, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
  for (auto const& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o) {
  for (auto const& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

LaurentPoly operator*(LaurentPoly const& l, LaurentPoly const& r) {
  LaurentPoly out;
  for (auto const& [wl, cl] : l.terms_)
    for (auto const& [wr, cr] : r.terms_) out.add_term(wl + wr, cl * cr);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(LaurentPoly const& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(Integer const& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator-(LaurentPoly p) {
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly exact_div_leading_term(LaurentPoly const& p, LaurentPoly const& d) {
  if (d.is_zero()) throw ZeroInput("division by the zero polynomial");
  if (p.is_zero()) return {};
  // Newton polytopes add under multiplication, so every quotient exponent
  // lies in this box.
  Box const bp = support_box(p);
  Box const bd = support_box(d);
  Box const bq{bp.lo0 - bd.lo0, bp.hi0 - bd.hi0, bp.lo1 - bd.lo1, bp.hi1 - bd.hi1};

  auto const& [lead_w, lead_c] = *d.terms().rbegin();
  LaurentPoly rem = p;
  LaurentPoly q;
  while (!rem.is_zero()) {
    auto const& [w, c] = *rem.terms().rbegin();
    Weight const e = w - lead_w;
    if (e.a0 < bq.lo0 || e.a0 > bq.hi0 || e.a1 < bq.lo1 || e.a1 > bq.hi1)
      throw NotDivisible("leading-term division leaves a remainder");
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
      throw NotDivisible("leading coefficient does not divide");
    LaurentPoly step = LaurentPoly::monomial(e, c / lead_c);
    q += step;
    rem -= step * d;
  }
  return q;
}

LaurentPoly exact_div(LaurentPoly const& p, LaurentPoly const& d) {
  if (d.is_zero()) throw ZeroInput("division by the zero polynomial");
  LaurentPoly q;
  switch (d.size()) {
    case 1:
      q = divide_by_monomial(p, d.terms().begin()->first, d.terms().begin()->second);
      break;
    case 2:
      q = divide_by_binomial(p, d);
      break;
    default:
      q = exact_div_leading_term(p, d);
  }
  if (!(q * d == p)) throw NotDivisible("quotient failed verification");
  return q;
}

Integer eval_at_one(LaurentPoly const& p) {
  Integer s = 0;
  for (auto const& [w, c] : p.terms()) s += c;
  return s;
}

GradedPoly lowest_graded_part(LaurentPoly const& p) {
  if (p.is_zero()) throw ZeroInput("lowest graded part of the zero polynomial");
  // Distinct exponents give linearly independent power sums once t reaches
  // the number of terms, so the loop always returns.
  for (unsigned t = 0; t <= p.size(); ++t) {
    GradedPoly comp;
    for (auto const& [w, c] : p.terms()) comp += Rational(c) * linear_power(w, t);
    if (!comp.is_zero()) return comp * Rational(1, factorial(t));
  }
  throw InternalError("no nonzero graded component found");
}

}  // namespace affsl2

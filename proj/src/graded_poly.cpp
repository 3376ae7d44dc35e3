#include "affsl2/graded_poly.hpp"

namespace affsl2 {

GradedPoly::GradedPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

GradedPoly::GradedPoly(Rational const& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

GradedPoly GradedPoly::monomial(Monomial m, Rational const& c) {
  GradedPoly p;
  p.add_term(m, c);
  return p;
}

GradedPoly GradedPoly::linear(Weight const& w) {
  GradedPoly p;
  p.add_term({1, 0}, Rational(Integer(static_cast<long>(w.a0))));
  p.add_term({0, 1}, Rational(Integer(static_cast<long>(w.a1))));
  return p;
}

Rational GradedPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool GradedPoly::is_homogeneous(std::uint32_t d) const {
  for (auto const& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

std::optional<std::uint32_t> GradedPoly::min_degree() const {
  std::optional<std::uint32_t> best;
  for (auto const& [m, c] : terms_)
    if (!best || m.degree() < *best) best = m.degree();
  return best;
}

GradedPoly GradedPoly::component(std::uint32_t d) const {
  GradedPoly r;
  for (auto const& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

bool GradedPoly::has_integer_coefficients() const {
  for (auto const& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void GradedPoly::add_term(Monomial m, Rational const& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPoly& GradedPoly::operator+=(GradedPoly const& o) {
  for (auto const& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(GradedPoly const& o) {
  for (auto const& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly operator*(GradedPoly const& l, GradedPoly const& r) {
  GradedPoly out;
  for (auto const& [ml, cl] : l.terms_)
    for (auto const& [mr, cr] : r.terms_) out.add_term({ml.i + mr.i, ml.j + mr.j}, cl * cr);
  return out;
}

GradedPoly& GradedPoly::operator*=(GradedPoly const& o) { return *this = *this * o; }

GradedPoly& GradedPoly::operator*=(Rational const& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GradedPoly operator-(GradedPoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

GradedPoly linear_power(Weight const& w, unsigned t) {
  GradedPoly out;
  Integer a(static_cast<long>(w.a0));
  Integer b(static_cast<long>(w.a1));
  for (unsigned s = 0; s <= t; ++s) {
    Integer pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), s);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), t - s);
    out.add_term({s, t - s}, Rational(binomial(t, s) * pa * pb));
  }
  return out;
}

}  // namespace affsl2

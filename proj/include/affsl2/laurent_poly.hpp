#pragma once

#include <map>

#include "affsl2/graded_poly.hpp"
#include "affsl2/numbers.hpp"
#include "affsl2/weight.hpp"

namespace affsl2 {

/// Finite integer combination of characters e^w, w in the root lattice.
/// Stored canonically: no zero coefficients, terms ordered by weight.
class LaurentPoly {
 public:
  using Terms = std::map<Weight, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers embed as constants
  explicit LaurentPoly(Integer const& c);

  static LaurentPoly monomial(Weight const& w, Integer const& c = 1);
  /// e^w - 1
  static LaurentPoly exp_minus_one(Weight const& w);

  Terms const& terms() const { return terms_; }
  Integer coeff(Weight const& w) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Weight const& w, Integer const& c);
  LaurentPoly shifted(Weight const& by) const;

  LaurentPoly& operator+=(LaurentPoly const& o);
  LaurentPoly& operator-=(LaurentPoly const& o);
  LaurentPoly& operator*=(LaurentPoly const& o);
  LaurentPoly& operator*=(Integer const& s);

  friend LaurentPoly operator+(LaurentPoly l, LaurentPoly const& r) { return l += r; }
  friend LaurentPoly operator-(LaurentPoly l, LaurentPoly const& r) { return l -= r; }
  friend LaurentPoly operator*(LaurentPoly const& l, LaurentPoly const& r);
  friend LaurentPoly operator*(Integer const& s, LaurentPoly p) { return p *= s; }
  friend LaurentPoly operator-(LaurentPoly p);
  friend bool operator==(LaurentPoly const& l, LaurentPoly const& r) { return l.terms_ == r.terms_; }

 private:
  Terms terms_;
};

/// Exact quotient p / d. Binomial divisors c*e^mu*(u*e^gamma + v) use
/// residue-class division modulo Z*gamma; monomials use an exponent shift;
/// anything else falls back to leading-term division. The quotient is always
/// checked by multiplying back. Throws ZeroInput for d == 0 and NotDivisible
/// when no exact quotient exists.
LaurentPoly exact_div(LaurentPoly const& p, LaurentPoly const& d);

/// Leading-term division under the lexicographic group order, for any
/// nonzero divisor. Used as the fallback path and as a cross-check.
LaurentPoly exact_div_leading_term(LaurentPoly const& p, LaurentPoly const& d);

/// Image under e^w -> 1.
Integer eval_at_one(LaurentPoly const& p);

/// Lowest nonzero homogeneous component of p under e^mu -> sum_t mu^t/t!.
/// Throws ZeroInput for p == 0.
GradedPoly lowest_graded_part(LaurentPoly const& p);

}  // namespace affsl2

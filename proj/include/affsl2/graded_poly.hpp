#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

#include "affsl2/numbers.hpp"
#include "affsl2/weight.hpp"

namespace affsl2 {

/// alpha_0^i * alpha_1^j.
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  constexpr std::uint32_t degree() const { return i + j; }
  friend constexpr auto operator<=>(Monomial const&, Monomial const&) = default;
};

/// Polynomial in alpha_0, alpha_1 with rational coefficients. Zero
/// coefficients are never stored.
class GradedPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  GradedPoly() = default;
  GradedPoly(long c);  // NOLINT: integers embed as constants
  explicit GradedPoly(Rational const& c);

  static GradedPoly monomial(Monomial m, Rational const& c = 1);
  /// The degree-one element w.a0*alpha_0 + w.a1*alpha_1.
  static GradedPoly linear(Weight const& w);

  Terms const& terms() const { return terms_; }
  Rational coeff(Monomial m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True iff every stored monomial has degree d (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous(std::uint32_t d) const;
  std::optional<std::uint32_t> min_degree() const;
  GradedPoly component(std::uint32_t d) const;
  bool has_integer_coefficients() const;

  void add_term(Monomial m, Rational const& c);

  GradedPoly& operator+=(GradedPoly const& o);
  GradedPoly& operator-=(GradedPoly const& o);
  GradedPoly& operator*=(GradedPoly const& o);
  GradedPoly& operator*=(Rational const& s);

  friend GradedPoly operator+(GradedPoly l, GradedPoly const& r) { return l += r; }
  friend GradedPoly operator-(GradedPoly l, GradedPoly const& r) { return l -= r; }
  friend GradedPoly operator*(GradedPoly const& l, GradedPoly const& r);
  friend GradedPoly operator*(Rational const& s, GradedPoly p) { return p *= s; }
  friend GradedPoly operator*(GradedPoly p, Rational const& s) { return p *= s; }
  friend GradedPoly operator-(GradedPoly p);
  friend bool operator==(GradedPoly const& l, GradedPoly const& r) { return l.terms_ == r.terms_; }

 private:
  Terms terms_;
};

/// (a*alpha_0 + b*alpha_1)^t, expanded.
GradedPoly linear_power(Weight const& w, unsigned t);

}  // namespace affsl2

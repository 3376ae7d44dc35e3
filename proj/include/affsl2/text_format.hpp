#pragma once

#include <string>
#include <string_view>

#include "affsl2/graded_poly.hpp"
#include "affsl2/laurent_poly.hpp"

namespace affsl2 {

// Canonical forms, used by every serializer:
//   LaurentPoly  "c*E[a,b] + c*E[a,b] + ..."   sorted by (a, b)
//   GradedPoly   "c*A0^i*A1^j + ..."           sorted by (i, j)
// The zero polynomial is "0". Coefficients are decimal integers or p/q.
std::string to_canonical(LaurentPoly const& p);
std::string to_canonical(GradedPoly const& p);

/// Accepts any well-formed term list (order and duplicates are normalized).
/// Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);
GradedPoly parse_graded(std::string_view text);

// Human-oriented renderings: "1 - E[1,0]", "A0^2 + 2*A0*A1".
std::string to_pretty(LaurentPoly const& p);
std::string to_pretty(GradedPoly const& p);

// LaTeX renderings: "1 - e^{\alpha_0}", "\alpha_0^{2} + 2\alpha_0\alpha_1".
std::string to_latex(LaurentPoly const& p);
std::string to_latex(GradedPoly const& p);
std::string to_latex(Rational const& r);

}  // namespace affsl2

#pragma once

#include <cstdint>

#include "affsl2/numbers.hpp"

namespace affsl2 {

// Closed forms in ordinary (non-equivariant) K-theory. Offsets are measured
// from the bottom of the support: koff = k - n - m.

/// d^{n+m+koff}_{n,m}(1) =
///   (-1)^koff (n+m+koff-1)! / ((n-1)!(m-1)!koff!) * (n+m+2koff) / ((n+koff)(m+koff)).
/// Requires n, m >= 1 and koff >= 0 (BadRange). Throws NonInteger if the
/// quotient is not integral.
Integer d_ordinary_closed(std::int64_t n, std::int64_t m, std::int64_t koff);

/// b^{n+m+koff}_{n,m}(1) = (-1)^koff (n+m+koff)! / (n! m! koff!).
Integer b_ordinary_closed(std::int64_t n, std::int64_t m, std::int64_t koff);

/// d^k_{1,m}(1) = (-1)^{k+m+1} [C(k-1,m-1) + C(k-2,m-1)] for k > m >= 1.
Integer d_ordinary_divisor(std::int64_t k, std::int64_t m);

/// d^k_{n,m}(1) indexed by k: zero below n+m, delta for the identity class,
/// closed form otherwise.
Integer d_ordinary_at(std::int64_t n, std::int64_t m, std::int64_t k);

/// b^k_{n,m}(1) indexed by k: zero below n+m.
Integer b_ordinary_at(std::int64_t n, std::int64_t m, std::int64_t k);

/// Right side of the four-term identity
///   d^{n+m+j}_{n,m} - d^{n+m+j}_{n+1,m} - d^{n+m+j}_{n,m+1} + d^{n+m+j}_{n+1,m+1}
///     = (-1)^j (n+m+j-1)! / (n! m! j!) * (n+m+2j)
/// in ordinary K-theory. The superscript is offset from n+m, which is the
/// reading under which summing over j reproduces b_ordinary_closed.
Integer dddd_rhs(std::int64_t n, std::int64_t m, std::int64_t j);

/// Evaluates both sides of the four-term identity from d_ordinary_at.
bool dddd_identity_check(std::int64_t n, std::int64_t m, std::int64_t j);

}  // namespace affsl2

#pragma once

#include <cstdint>

#include "affsl2/graded_poly.hpp"

namespace affsl2 {

// Closed forms for cohomology quantities. They are comparison targets only;
// CohomologyTable never consults them.

/// Q^1_{i,j} = q_i + ... + q_{i+j}, by parity of (i, j).
GradedPoly Q1_closed(std::int64_t i, std::int64_t j);

/// q_1 + ... + q_k, by parity of k.
GradedPoly sumq_closed(std::int64_t k);

/// c^{n+m-1}_{n,m} for n, m >= 1, by parity of (n, m).
GradedPoly c_top_minus_1(std::int64_t n, std::int64_t m);

/// c^{n+m-2}_{n,m} = a (b0 alpha_0^2 + b1 alpha_0 alpha_1 + b2 alpha_1^2),
/// a, b0, b1, b2 by parity of (n, m). Zero when n+m-2 < max(n,m), i.e. when
/// min(n,m) < 2, where the constant lies outside the support.
GradedPoly c_top_minus_2(std::int64_t n, std::int64_t m);

/// c^m_{n,m} for 0 <= n <= m as a binomial times a product of n linear
/// forms. Throws BadRange if n > m.
GradedPoly c_bottom(std::int64_t n, std::int64_t m);

}  // namespace affsl2

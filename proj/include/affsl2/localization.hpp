#pragma once

#include <cstdint>

#include "affsl2/laurent_poly.hpp"

namespace affsl2 {

/// d^m_{n,m} for n <= m: the localization of the Schubert class O^n at the
/// fixed point w_m,
///   (-1)^n sum over subsets {j_1 < ... < j_p} of positions of w_m whose
///   Demazure product is w_n, of prod_t (e^{beta_{j_t}} - 1).
/// Dynamic program over positions with DemazureState as the state.
/// Throws BadRange if n > m or n < 0.
LaurentPoly d_base(std::int64_t n, std::int64_t m);

/// Same quantity by literal enumeration of all 2^m subsets. Throws TooLarge
/// for m > kBruteForceMax.
LaurentPoly d_base_bruteforce(std::int64_t n, std::int64_t m);

inline constexpr std::int64_t kBruteForceMax = 16;

}  // namespace affsl2

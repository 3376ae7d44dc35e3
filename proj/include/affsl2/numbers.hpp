#pragma once

#include <gmpxx.h>

namespace affsl2 {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n

}  // namespace affsl2

#include "affsl2/ordinary.hpp"

#include <string>

#include "affsl2/errors.hpp"

namespace affsl2 {
namespace {

unsigned long as_ulong(std::int64_t v) { return static_cast<unsigned long>(v); }

Integer exact_quotient(Integer const& num, Integer const& den, char const* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw NonInteger(std::string(what) + ": closed form is not integral");
  return num / den;
}

}  // namespace

Integer d_ordinary_closed(std::int64_t n, std::int64_t m, std::int64_t koff) {
  if (n < 1 || m < 1 || koff < 0) throw BadRange("d_ordinary_closed: need n, m >= 1 and koff >= 0");
  Integer num = factorial(as_ulong(n + m + koff - 1)) * (n + m + 2 * koff);
  Integer den = factorial(as_ulong(n - 1)) * factorial(as_ulong(m - 1)) * factorial(as_ulong(koff)) *
                Integer(static_cast<long>((n + koff) * (m + koff)));
  Integer v = exact_quotient(num, den, "d_ordinary_closed");
  return koff % 2 != 0 ? Integer(-v) : v;
}

Integer b_ordinary_closed(std::int64_t n, std::int64_t m, std::int64_t koff) {
  if (n < 0 || m < 0 || koff < 0) throw BadRange("b_ordinary_closed: indices must be nonnegative");
  Integer v = factorial(as_ulong(n + m + koff)) /
              (factorial(as_ulong(n)) * factorial(as_ulong(m)) * factorial(as_ulong(koff)));
  return koff % 2 != 0 ? Integer(-v) : v;
}

Integer d_ordinary_divisor(std::int64_t k, std::int64_t m) {
  if (m < 1 || k <= m) throw BadRange("d_ordinary_divisor: need k > m >= 1");
  Integer v = binomial(k - 1, m - 1) + binomial(k - 2, m - 1);
  return (k + m + 1) % 2 != 0 ? Integer(-v) : v;
}

Integer d_ordinary_at(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 0 || m < 0) return 0;
  if (n == 0 || m == 0) return k == n + m ? 1 : 0;
  if (k < n + m) return 0;
  return d_ordinary_closed(n, m, k - n - m);
}

Integer b_ordinary_at(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 0 || m < 0 || k < n + m) return 0;
  return b_ordinary_closed(n, m, k - n - m);
}

Integer dddd_rhs(std::int64_t n, std::int64_t m, std::int64_t j) {
  if (n < 1 || m < 1 || j < 0) throw BadRange("dddd_rhs: need n, m >= 1 and j >= 0");
  Integer v = factorial(as_ulong(n + m + j - 1)) * (n + m + 2 * j);
  v = exact_quotient(v, factorial(as_ulong(n)) * factorial(as_ulong(m)) * factorial(as_ulong(j)), "dddd_rhs");
  return j % 2 != 0 ? Integer(-v) : v;
}

bool dddd_identity_check(std::int64_t n, std::int64_t m, std::int64_t j) {
  std::int64_t const k = n + m + j;
  Integer lhs = d_ordinary_at(n, m, k) - d_ordinary_at(n + 1, m, k) - d_ordinary_at(n, m + 1, k) +
                d_ordinary_at(n + 1, m + 1, k);
  return lhs == dddd_rhs(n, m, j);
}

}  // namespace affsl2

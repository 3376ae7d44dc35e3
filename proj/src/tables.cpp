#include "affsl2/tables.hpp"

#include <algorithm>

#include "affsl2/ordinary.hpp"

namespace affsl2 {

Value compute(Tables& t, Theory theory, std::int64_t n, std::int64_t m, std::int64_t k) {
  switch (theory) {
    case Theory::k_equivariant:
      return t.k.d(n, m, k);
    // Ordinary values come from the closed forms; the suite checks them
    // against the equivariant recursion evaluated at 1.
    case Theory::k_ordinary:
      return d_ordinary_at(n, m, k);
    case Theory::xi_equivariant:
      return t.k.b(n, m, k);
    case Theory::xi_ordinary:
      return b_ordinary_at(n, m, k);
    case Theory::cohomology:
      return t.h.c(n, m, k);
  }
  return Integer(0);
}

std::int64_t support_start(Theory theory, std::int64_t n, std::int64_t m) {
  switch (theory) {
    case Theory::k_ordinary:
    case Theory::xi_ordinary:
      return n + m;
    default:
      return std::max(n, m);
  }
}

}  // namespace affsl2

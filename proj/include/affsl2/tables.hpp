#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "affsl2/cohomology.hpp"
#include "affsl2/ktheory.hpp"

namespace affsl2 {

/// The five coefficient families exposed by the command line.
enum class Theory { k_equivariant, k_ordinary, xi_equivariant, xi_ordinary, cohomology };

std::string_view to_string(Theory t);
Theory parse_theory(std::string_view s);  // throws BadRequest

/// Every memo table the tools work against.
struct Tables {
  KTheoryTable k;
  CohomologyTable h;
};

using Value = std::variant<LaurentPoly, GradedPoly, Integer>;

Value compute(Tables& t, Theory theory, std::int64_t n, std::int64_t m, std::int64_t k);

/// First k at which the family can be nonzero for (n, m).
std::int64_t support_start(Theory theory, std::int64_t n, std::int64_t m);

}  // namespace affsl2

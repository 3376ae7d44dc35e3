#pragma once

#include <cstdint>
#include <vector>

#include "affsl2/laurent_poly.hpp"
#include "affsl2/weight.hpp"

namespace affsl2 {

/// An LS path of shape Lambda_0 running from w_begin down to w_end, encoded
/// by the integer chain 1 <= i_begin <= ... <= i_{end+1} <= end. The path's
/// rational turning points are b_j = i_j / j.
struct LSPathTuple {
  std::int64_t begin = 0;
  std::int64_t end = 0;
  std::vector<std::int64_t> indices;  // (i_begin, i_{begin-1}, ..., i_{end+1})

  /// i_j for end < j <= begin.
  std::int64_t index_at(std::int64_t j) const { return indices.at(static_cast<std::size_t>(begin - j)); }

  friend bool operator==(LSPathTuple const&, LSPathTuple const&) = default;
};

/// All LS paths from w_l to w_m in lexicographic order of their index
/// sequence. Throws BadRange if l < m.
std::vector<LSPathTuple> enumerate_paths(std::int64_t l, std::int64_t m);

/// sum over j of i_j alpha_0 (j odd) or i_j alpha_1 (j even).
Weight path_weight_chi(LSPathTuple const& p);

/// Root-lattice part of the Chevalley coefficient a^k_m for Lambda_0:
/// (-1)^(k+m) e^{q_m} sum e^{chi(p)} over paths in p(k,m) and p(k-1,m).
/// Throws BadRange if k < m.
LaurentPoly chevalley_a(std::int64_t k, std::int64_t m);

/// d^k_{1,m}: multiplication by the Schubert divisor. Zero for k < m.
LaurentPoly d_divisor(std::int64_t k, std::int64_t m);

}  // namespace affsl2

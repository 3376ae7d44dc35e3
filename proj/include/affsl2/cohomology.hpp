#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

#include "affsl2/graded_poly.hpp"
#include "affsl2/ktheory.hpp"

namespace affsl2 {

/// q_m as a degree-one polynomial in alpha_0, alpha_1.
GradedPoly q_graded(std::int64_t m);

struct CEntry {
  GradedPoly value;
  Provenance provenance = Provenance::recursion;
};

/// Memoized T-equivariant cohomology structure constants c^k_{n,m} and the
/// complete homogeneous sums Q^d_{i,j} = h_d(q_i, ..., q_{i+j}).
///
/// For n <= m and 0 <= i <= n,
///   c^{m+i}_{n,m} = 1/n! [ (m+i)!/m! Q^{n-i}_{m,i}
///                          - sum_{k=max(i,1)}^{n-1} k! Q^{n-k}_{1,k-1} c^{m+i}_{k,m} ],
/// with the divisor row c^m_{1,m} = q_m, c^{m+1}_{1,m} = m+1 as base.
class CohomologyTable {
 public:
  /// Q^d_{i,j} via Q^d_{i,j} = Q^{d-1}_{i,j} q_{i+j} + Q^d_{i,j-1}, with
  /// Q^d_{i,-1} = [d == 0].
  GradedPoly Q(std::int64_t d, std::int64_t i, std::int64_t j);

  /// c^k_{n,m}; zero outside max(n,m) <= k <= n+m. Throws NonInteger if a
  /// computed value has a fractional coefficient.
  GradedPoly c(std::int64_t n, std::int64_t m, std::int64_t k);

  std::map<EntryKey, CEntry> entries() const;
  void seed(EntryKey key, CEntry entry);
  std::size_t q_memo_size() const;

 private:
  GradedPoly Q_locked(std::int64_t d, std::int64_t i, std::int64_t j);
  GradedPoly c_locked(std::int64_t n, std::int64_t m, std::int64_t k);
  void fill_row(std::int64_t n, std::int64_t m);

  mutable std::mutex mutex_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, GradedPoly> q_memo_;
  std::map<EntryKey, CEntry> c_memo_;
};

/// Checks (eps_1)^n eps_m = sum_i (m+i)!/m! Q^{n-i}_{m,i} eps_{m+i} and
/// (eps_1)^n = sum_k k! Q^{n-k}_{1,k-1} eps_k against repeated application
/// of eps_1 eps_j = q_j eps_j + (j+1) eps_{j+1}, for 1 <= n <= nmax and
/// 0 <= m <= mmax.
bool euler_class_identities(CohomologyTable& table, std::int64_t nmax = 6, std::int64_t mmax = 6);

}  // namespace affsl2

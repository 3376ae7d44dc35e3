#include "affsl2/cohomology.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "affsl2/errors.hpp"
#include "affsl2/weyl.hpp"

namespace affsl2 {
namespace {

Rational fact(std::int64_t n) { return Rational(factorial(static_cast<unsigned long>(n))); }

std::string describe(std::int64_t n, std::int64_t m, std::int64_t k) {
  return "c(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
}

// Element of H_T: coefficient of eps_j for each j.
using Expansion = std::map<std::int64_t, GradedPoly>;

Expansion times_eps1(Expansion const& x) {
  Expansion out;
  for (auto const& [j, coef] : x) {
    out[j] += coef * q_graded(j);
    out[j + 1] += coef * GradedPoly(j + 1);
  }
  std::erase_if(out, [](auto const& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

GradedPoly q_graded(std::int64_t m) { return GradedPoly::linear(q(m)); }

GradedPoly CohomologyTable::Q(std::int64_t d, std::int64_t i, std::int64_t j) {
  std::lock_guard lock(mutex_);
  return Q_locked(d, i, j);
}

GradedPoly CohomologyTable::Q_locked(std::int64_t d, std::int64_t i, std::int64_t j) {
  if (d < 0) return {};
  if (j < 0) return d == 0 ? GradedPoly(1) : GradedPoly();
  if (d == 0) return GradedPoly(1);
  auto key = std::make_tuple(d, i, j);
  if (auto it = q_memo_.find(key); it != q_memo_.end()) return it->second;
  GradedPoly v = Q_locked(d - 1, i, j) * q_graded(i + j) + Q_locked(d, i, j - 1);
  return q_memo_.emplace(key, std::move(v)).first->second;
}

GradedPoly CohomologyTable::c(std::int64_t n, std::int64_t m, std::int64_t k) {
  std::lock_guard lock(mutex_);
  return c_locked(n, m, k);
}

GradedPoly CohomologyTable::c_locked(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 0 || m < 0) return {};
  if (n > m) std::swap(n, m);
  if (k < m || k > n + m) return {};
  if (n == 0) return GradedPoly(1);
  EntryKey const key{n, m, k};
  if (auto it = c_memo_.find(key); it == c_memo_.end()) fill_row(n, m);
  return c_memo_.at(key).value;
}

// Computes c^{m+i}_{n,m} for i = n down to 0.
void CohomologyTable::fill_row(std::int64_t n, std::int64_t m) {
  if (n == 1) {
    c_memo_.insert_or_assign(EntryKey{1, m, m}, CEntry{q_graded(m), Provenance::chevalley});
    c_memo_.insert_or_assign(EntryKey{1, m, m + 1}, CEntry{GradedPoly(m + 1), Provenance::chevalley});
    return;
  }
  for (std::int64_t i = n; i >= 0; --i) {
    EntryKey const key{n, m, m + i};
    if (c_memo_.contains(key)) continue;
    GradedPoly v = Q_locked(n - i, m, i) * (fact(m + i) / fact(m));
    for (std::int64_t kk = std::max<std::int64_t>(i, 1); kk < n; ++kk)
      v -= Q_locked(n - kk, 1, kk - 1) * c_locked(kk, m, m + i) * fact(kk);
    v *= Rational(1) / fact(n);
    if (!v.has_integer_coefficients()) throw NonInteger(describe(n, m, m + i) + " has a fractional coefficient");
    if (!v.is_homogeneous(static_cast<std::uint32_t>(n - i)))
      throw InternalError(describe(n, m, m + i) + " is not homogeneous of degree " + std::to_string(n - i));
    c_memo_.insert_or_assign(key, CEntry{std::move(v), Provenance::recursion});
  }
}

std::map<EntryKey, CEntry> CohomologyTable::entries() const {
  std::lock_guard lock(mutex_);
  return c_memo_;
}

void CohomologyTable::seed(EntryKey key, CEntry entry) {
  std::lock_guard lock(mutex_);
  if (key.n > key.m) std::swap(key.n, key.m);
  c_memo_.insert_or_assign(key, std::move(entry));
}

std::size_t CohomologyTable::q_memo_size() const {
  std::lock_guard lock(mutex_);
  return q_memo_.size();
}

bool euler_class_identities(CohomologyTable& table, std::int64_t nmax, std::int64_t mmax) {
  for (std::int64_t m = 0; m <= mmax; ++m) {
    Expansion power{{m, GradedPoly(1)}};
    for (std::int64_t n = 1; n <= nmax; ++n) {
      power = times_eps1(power);
      Expansion closed;
      for (std::int64_t i = 0; i <= n; ++i) {
        GradedPoly coef = table.Q(n - i, m, i) * (fact(m + i) / fact(m));
        if (!coef.is_zero()) closed[m + i] = std::move(coef);
      }
      if (closed != power) return false;
    }
  }
  Expansion power{{1, GradedPoly(1)}};
  for (std::int64_t n = 1; n <= nmax; ++n) {
    if (n > 1) power = times_eps1(power);
    Expansion closed;
    for (std::int64_t k = 1; k <= n; ++k) {
      GradedPoly coef = table.Q(n - k, 1, k - 1) * fact(k);
      if (!coef.is_zero()) closed[k] = std::move(coef);
    }
    if (closed != power) return false;
  }
  return true;
}

}  // namespace affsl2

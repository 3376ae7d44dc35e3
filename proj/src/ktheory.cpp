#include "affsl2/ktheory.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "affsl2/errors.hpp"
#include "affsl2/localization.hpp"
#include "affsl2/ls_paths.hpp"

namespace affsl2 {
namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 5> kProvenanceNames{{
    {Provenance::recursion, "recursion"},
    {Provenance::closed_form, "closed-form"},
    {Provenance::chevalley, "chevalley"},
    {Provenance::localization, "localization"},
    {Provenance::conversion, "conversion"},
}};

std::string describe(EntryKey const& k) {
  return "(n=" + std::to_string(k.n) + ", m=" + std::to_string(k.m) + ", k=" + std::to_string(k.k) + ")";
}

}  // namespace

std::string_view to_string(Provenance p) {
  for (auto const& [v, name] : kProvenanceNames)
    if (v == p) return name;
  return "unknown";
}

Provenance parse_provenance(std::string_view s) {
  for (auto const& [v, name] : kProvenanceNames)
    if (name == s) return v;
  throw ParseError("unknown provenance '" + std::string(s) + "'");
}

EntryKey KTheoryTable::canonical(std::int64_t n, std::int64_t m, std::int64_t k) const {
  if (opts_.symmetrize && n > m) std::swap(n, m);
  return {n, m, k};
}

LaurentPoly KTheoryTable::d(std::int64_t n, std::int64_t m, std::int64_t k) {
  std::lock_guard lock(mutex_);
  return d_locked(n, m, k);
}

LaurentPoly KTheoryTable::b(std::int64_t n, std::int64_t m, std::int64_t k) {
  std::lock_guard lock(mutex_);
  return b_locked(n, m, k);
}

LaurentPoly KTheoryTable::d_locked(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 0 || m < 0 || k < 0) return {};
  std::int64_t const lo = std::min(n, m);
  std::int64_t const hi = std::max(n, m);
  if (k < hi) return {};
  // O^0 is the identity class.
  if (lo == 0) return k == hi ? LaurentPoly(1) : LaurentPoly();

  EntryKey const key = canonical(n, m, k);
  if (auto it = d_memo_.find(key); it != d_memo_.end()) return it->second.value;

  KEntry entry;
  if (k == hi) {
    entry = {d_base(lo, hi), Provenance::localization};
  } else if (key.n == 1) {
    entry = {d_divisor(k, key.m), Provenance::chevalley};
  } else {
    entry = {recurse(key), Provenance::recursion};
  }
  return d_memo_.emplace(key, std::move(entry)).first->second.value;
}

// Solves the associativity identity for d^k_{n,m}, recursing on key.n.
// Every term on the right has either a smaller upper index or a larger first
// index at the same k, so a revisit of an in-progress key means the
// schedule is broken.
LaurentPoly KTheoryTable::recurse(EntryKey const& key) {
  auto const [n, m, k] = key;
  if (!in_progress_.insert(key).second) throw InternalError("recursion cycle at " + describe(key));
  struct Release {
    std::set<EntryKey>& set;
    EntryKey key;
    ~Release() { set.erase(key); }
  } release{in_progress_, key};

  std::int64_t const hi = std::max(n, m);
  LaurentPoly rhs;
  for (std::int64_t i = hi; i < k; ++i) rhs += d_locked(n, m, i) * d_locked(1, i, k);
  for (std::int64_t j = n + 1; j <= k; ++j) rhs -= d_locked(1, n, j) * d_locked(j, m, k);
  LaurentPoly const denom = d_locked(1, n, n) - d_locked(1, k, k);

  LaurentPoly result;
  try {
    result = exact_div(rhs, denom);
  } catch (NotDivisible const& e) {
    throw NotDivisible("recursion step " + describe(key) + ": " + e.what());
  }
  ++divisions_;
  return result;
}

LaurentPoly KTheoryTable::b_locked(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 0 || m < 0 || k < 0) return {};
  EntryKey const key = canonical(n, m, k);
  if (auto it = b_memo_.find(key); it != b_memo_.end()) return it->second.value;

  LaurentPoly value = b_locked(n, m, k - 1);
  value += d_locked(n, m, k);
  value -= d_locked(n + 1, m, k);
  value -= d_locked(n, m + 1, k);
  value += d_locked(n + 1, m + 1, k);
  return b_memo_.emplace(key, KEntry{std::move(value), Provenance::conversion}).first->second.value;
}

std::map<EntryKey, KEntry> KTheoryTable::d_entries() const {
  std::lock_guard lock(mutex_);
  return d_memo_;
}

std::map<EntryKey, KEntry> KTheoryTable::b_entries() const {
  std::lock_guard lock(mutex_);
  return b_memo_;
}

void KTheoryTable::seed_d(EntryKey key, KEntry entry) {
  std::lock_guard lock(mutex_);
  d_memo_.insert_or_assign(canonical(key.n, key.m, key.k), std::move(entry));
}

void KTheoryTable::seed_b(EntryKey key, KEntry entry) {
  std::lock_guard lock(mutex_);
  b_memo_.insert_or_assign(canonical(key.n, key.m, key.k), std::move(entry));
}

std::size_t KTheoryTable::divisions() const {
  std::lock_guard lock(mutex_);
  return divisions_;
}

}  // namespace affsl2

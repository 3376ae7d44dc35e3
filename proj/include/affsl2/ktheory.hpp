#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string_view>

#include "affsl2/laurent_poly.hpp"
#include "affsl2/numbers.hpp"

namespace affsl2 {

/// Which computation produced a stored constant.
enum class Provenance { recursion, closed_form, chevalley, localization, conversion };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view s);  // throws ParseError

struct EntryKey {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  friend auto operator<=>(EntryKey const&, EntryKey const&) = default;
};

struct KEntry {
  LaurentPoly value;
  Provenance provenance = Provenance::recursion;
};

/// Memoized T-equivariant K-theory structure constants of the affine
/// Grassmannian of SL2, in the structure-sheaf basis (d^k_{n,m}) and the
/// ideal-sheaf basis (b^k_{n,m}).
///
/// d is assembled from three sources: the divisor row d^k_{1,m}
/// (Chevalley formula), the diagonal d^m_{n,m} (localization), and the
/// associativity recursion
///
///   d^k_{n,m} (d^n_{1,n} - d^k_{1,k})
///     = sum_{i=max(n,m)}^{k-1} d^i_{n,m} d^k_{1,i} - sum_{j=n+1}^{k} d^j_{1,n} d^k_{j,m}
///
/// whose left factor is e^{q_k} - e^{q_n}, divided out exactly.
///
/// All public members are serialized on an internal mutex; stored entries
/// never change once computed.
class KTheoryTable {
 public:
  struct Options {
    /// Store and recurse on (min, max) index order. With false the first
    /// index is always the one recursed on, which exercises a different
    /// evaluation path for d(n,m,k) and d(m,n,k).
    bool symmetrize = true;
  };

  KTheoryTable() = default;
  explicit KTheoryTable(Options opts) : opts_(opts) {}

  /// d^k_{n,m}; zero whenever some index is negative or k < max(n,m).
  /// Throws NotDivisible (internal inconsistency) if a recursion step has no
  /// exact quotient.
  LaurentPoly d(std::int64_t n, std::int64_t m, std::int64_t k);

  /// b^k_{n,m} = sum_{j<=k} (d^j_{n,m} - d^j_{n+1,m} - d^j_{n,m+1} + d^j_{n+1,m+1}).
  LaurentPoly b(std::int64_t n, std::int64_t m, std::int64_t k);

  /// Ordinary K-theory constants: evaluations of d and b at 1.
  Integer d_ordinary(std::int64_t n, std::int64_t m, std::int64_t k) { return eval_at_one(d(n, m, k)); }
  Integer b_ordinary(std::int64_t n, std::int64_t m, std::int64_t k) { return eval_at_one(b(n, m, k)); }

  std::map<EntryKey, KEntry> d_entries() const;
  std::map<EntryKey, KEntry> b_entries() const;

  /// Inserts a precomputed entry (cache load). Keys are canonicalized the
  /// same way as computed ones.
  void seed_d(EntryKey key, KEntry entry);
  void seed_b(EntryKey key, KEntry entry);

  std::size_t divisions() const;
  bool symmetrized() const { return opts_.symmetrize; }

 private:
  EntryKey canonical(std::int64_t n, std::int64_t m, std::int64_t k) const;
  LaurentPoly d_locked(std::int64_t n, std::int64_t m, std::int64_t k);
  LaurentPoly b_locked(std::int64_t n, std::int64_t m, std::int64_t k);
  LaurentPoly recurse(EntryKey const& key);

  Options opts_;
  mutable std::mutex mutex_;
  std::map<EntryKey, KEntry> d_memo_;
  std::map<EntryKey, KEntry> b_memo_;
  std::set<EntryKey> in_progress_;
  std::size_t divisions_ = 0;
};

}  // namespace affsl2

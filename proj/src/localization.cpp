#include "affsl2/localization.hpp"

#include <map>
#include <string>

#include "affsl2/errors.hpp"
#include "affsl2/weyl.hpp"

namespace affsl2 {
namespace {

void check_range(std::int64_t n, std::int64_t m) {
  if (n < 0 || n > m)
    throw BadRange("localization: need 0 <= n <= m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

bool accepts(DemazureState const& s, std::int64_t n) {
  if (static_cast<std::int64_t>(s.collapsed_len) != n) return false;
  return n == 0 || s.last_letter == Letter::s0;
}

}  // namespace

LaurentPoly d_base(std::int64_t n, std::int64_t m) {
  check_range(n, m);
  WeylWord const word = reduced_word(static_cast<std::size_t>(m));

  std::map<DemazureState, LaurentPoly> states;
  states.emplace(DemazureState{}, LaurentPoly(1));
  for (std::int64_t pos = 1; pos <= m; ++pos) {
    Letter const letter = word.at(static_cast<std::size_t>(pos));
    LaurentPoly const factor = LaurentPoly::exp_minus_one(beta(m, pos));
    std::map<DemazureState, LaurentPoly> next = states;  // position skipped
    for (auto const& [state, acc] : states) {
      DemazureState const to = state.append(letter);
      if (static_cast<std::int64_t>(to.collapsed_len) > n) continue;
      next[to] += acc * factor;
    }
    states = std::move(next);
  }

  LaurentPoly total;
  for (auto const& [state, acc] : states)
    if (accepts(state, n)) total += acc;
  return n % 2 != 0 ? -total : total;
}

LaurentPoly d_base_bruteforce(std::int64_t n, std::int64_t m) {
  check_range(n, m);
  if (m > kBruteForceMax) throw TooLarge("d_base_bruteforce: m=" + std::to_string(m) + " exceeds guard");
  WeylWord const word = reduced_word(static_cast<std::size_t>(m));
  WeylWord const target = reduced_word(static_cast<std::size_t>(n));

  LaurentPoly total;
  std::vector<Letter> sub;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto chosen = [mask](std::int64_t pos) { return (mask >> (pos - 1) & 1U) != 0; };
    sub.clear();
    for (std::int64_t pos = 1; pos <= m; ++pos)
      if (chosen(pos)) sub.push_back(word.at(static_cast<std::size_t>(pos)));
    if (demazure_product(sub) != target) continue;
    LaurentPoly term(1);
    for (std::int64_t pos = 1; pos <= m; ++pos)
      if (chosen(pos)) term *= LaurentPoly::exp_minus_one(beta(m, pos));
    total += term;
  }
  return n % 2 != 0 ? -total : total;
}

}  // namespace affsl2

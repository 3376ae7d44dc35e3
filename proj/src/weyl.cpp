#include "affsl2/weyl.hpp"

#include <string>

#include "affsl2/errors.hpp"

namespace affsl2 {

bool WeylWord::is_reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1]) return false;
  return true;
}

WeylWord reduced_word(std::size_t n) {
  WeylWord w;
  w.letters.reserve(n);
  for (std::size_t pos = 1; pos <= n; ++pos) w.letters.push_back(static_cast<Letter>((n - pos) % 2));
  return w;
}

DemazureState DemazureState::append(Letter l) const {
  if (last_letter == l) return *this;
  return {collapsed_len + 1, l};
}

WeylWord demazure_product(std::span<Letter const> letters) {
  WeylWord w;
  for (Letter l : letters)
    if (w.letters.empty() || w.letters.back() != l) w.letters.push_back(l);
  return w;
}

Weight beta(std::int64_t m, std::int64_t l) {
  if (l < 1 || l > m)
    throw OutOfRange("beta: index " + std::to_string(l) + " outside 1.." + std::to_string(m));
  return m % 2 != 0 ? Weight{l, l - 1} : Weight{l - 1, l};
}

Weight q(std::int64_t m) {
  std::int64_t const up = (m + 1) / 2;
  std::int64_t const down = m / 2;
  return {up * up, down * down + down};
}

Weight w_lambda0(std::int64_t i) {
  std::int64_t const j = i / 2;
  if (i % 2 == 0) return {-j * j, -(j * j + j)};
  return {-(j + 1) * (j + 1), -(j * j + j)};
}

Weight w_lambda0_diff(std::int64_t i) {
  if (i < 1) throw OutOfRange("w_lambda0_diff: index must be positive");
  return i % 2 != 0 ? Weight{i, 0} : Weight{0, i};
}

}  // namespace affsl2

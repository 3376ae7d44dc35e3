#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affsl2/weight.hpp"

namespace affsl2 {

/// Simple reflection s_0 or s_1 of the affine Weyl group of SL2.
enum class Letter : std::uint8_t { s0 = 0, s1 = 1 };

constexpr Letter other(Letter l) { return l == Letter::s0 ? Letter::s1 : Letter::s0; }

/// A word in s_0, s_1. W is the free product of two groups of order two, so
/// a word is reduced iff no two adjacent letters coincide.
struct WeylWord {
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool is_reduced() const;
  /// Letter at 1-indexed position pos.
  Letter at(std::size_t pos) const { return letters.at(pos - 1); }

  friend bool operator==(WeylWord const&, WeylWord const&) = default;
};

/// The minimal coset representative w_n: alternating, length n, ending in s_0.
WeylWord reduced_word(std::size_t n);

/// Left fold of the Demazure rules s*s = s and s*t = st.
WeylWord demazure_product(std::span<Letter const> letters);

/// Demazure fold of a subword, summarized by its length and last letter.
/// Collapsed words are alternating, so these two fields determine them.
struct DemazureState {
  std::size_t collapsed_len = 0;
  std::optional<Letter> last_letter;

  /// State after appending one more letter.
  DemazureState append(Letter l) const;

  friend auto operator<=>(DemazureState const&, DemazureState const&) = default;
};

/// beta_l = s_{i_1}...s_{i_{l-1}} alpha_{i_l} for the reduced word of w_m.
/// Requires 1 <= l <= m, throws OutOfRange otherwise.
Weight beta(std::int64_t m, std::int64_t l);

/// q_m = ceil(m/2)^2 alpha_0 + (floor(m/2)^2 + floor(m/2)) alpha_1.
Weight q(std::int64_t m);

/// w_i Lambda_0 - Lambda_0.
Weight w_lambda0(std::int64_t i);

/// w_{i-1} Lambda_0 - w_i Lambda_0, for i >= 1.
Weight w_lambda0_diff(std::int64_t i);

}  // namespace affsl2

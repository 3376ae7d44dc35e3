#pragma once

#include <compare>
#include <cstdint>

namespace affsl2 {

/// Element a0*alpha_0 + a1*alpha_1 of the root lattice.
struct Weight {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;

  constexpr Weight() = default;
  constexpr Weight(std::int64_t c0, std::int64_t c1) : a0(c0), a1(c1) {}

  constexpr Weight& operator+=(Weight const& o) {
    a0 += o.a0;
    a1 += o.a1;
    return *this;
  }
  constexpr Weight& operator-=(Weight const& o) {
    a0 -= o.a0;
    a1 -= o.a1;
    return *this;
  }
  constexpr bool is_zero() const { return a0 == 0 && a1 == 0; }

  friend constexpr Weight operator+(Weight l, Weight const& r) { return l += r; }
  friend constexpr Weight operator-(Weight l, Weight const& r) { return l -= r; }
  friend constexpr Weight operator-(Weight const& w) { return {-w.a0, -w.a1}; }
  friend constexpr Weight operator*(std::int64_t s, Weight const& w) { return {s * w.a0, s * w.a1}; }

  // Lexicographic in (a0, a1); also the order used for canonical text.
  friend constexpr auto operator<=>(Weight const&, Weight const&) = default;
};

}  // namespace affsl2

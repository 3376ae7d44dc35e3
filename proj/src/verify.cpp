#include "affsl2/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <string>

#include "affsl2/closed_forms.hpp"
#include "affsl2/errors.hpp"
#include "affsl2/localization.hpp"
#include "affsl2/ls_paths.hpp"
#include "affsl2/ordinary.hpp"
#include "affsl2/text_format.hpp"
#include "affsl2/weyl.hpp"

namespace affsl2 {
namespace {

using i64 = std::int64_t;

// Counts cases and keeps the first counterexample.
struct Probe {
  std::size_t cases = 0;
  std::string failure;

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && failure.empty()) failure = describe();
  }
};

std::string idx(char const* name, i64 v) { return std::string(name) + "=" + std::to_string(v); }

std::string at(std::initializer_list<std::pair<char const*, i64>> items) {
  std::string s = "(";
  for (auto const& [name, v] : items) {
    if (s.size() > 1) s += ", ";
    s += idx(name, v);
  }
  return s + ")";
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(gen_); }

  LaurentPoly laurent(int max_terms = 20) {
    LaurentPoly p;
    int const terms = static_cast<int>(uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) p.add_term({uniform(-4, 4), uniform(-4, 4)}, Integer(static_cast<long>(uniform(-5, 5))));
    return p;
  }

  LaurentPoly nonzero_laurent(int max_terms = 20) {
    LaurentPoly p;
    while (p.is_zero()) p = laurent(max_terms);
    return p;
  }

  GradedPoly homogeneous(std::uint32_t degree) {
    GradedPoly p;
    for (std::uint32_t i = 0; i <= degree; ++i)
    {
      Rational c(static_cast<long>(uniform(-6, 6)), static_cast<long>(uniform(1, 4)));
      c.canonicalize();
      p.add_term({i, degree - i}, c);
    }
    return p;
  }

  std::vector<Letter> letters(std::size_t max_len) {
    std::vector<Letter> out(static_cast<std::size_t>(uniform(0, static_cast<i64>(max_len))));
    for (auto& l : out) l = static_cast<Letter>(uniform(0, 1));
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

// h_d(q_i, ..., q_{i+j}) by listing multisets as nondecreasing index tuples.
GradedPoly q_multiset_sum(i64 d, i64 i, i64 j) {
  GradedPoly total;
  std::function<void(i64, i64, GradedPoly const&)> rec = [&](i64 left, i64 from, GradedPoly const& acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (i64 v = from; v <= i + j; ++v) rec(left - 1, v, acc * GradedPoly::linear(q(v)));
  };
  rec(d, i, GradedPoly(1));
  return total;
}

GradedPoly q_direct_sum(i64 from, i64 to) {
  GradedPoly s;
  for (i64 v = from; v <= to; ++v) s += GradedPoly::linear(q(v));
  return s;
}

}  // namespace

VerifyLevel parse_level(std::string_view s) {
  if (s == "quick") return VerifyLevel::quick;
  if (s == "full") return VerifyLevel::full;
  throw BadRequest("unknown verify level '" + std::string(s) + "'");
}

bool VerifyReport::all_passed() const {
  for (auto const& c : checks)
    if (!c.passed) return false;
  return true;
}

void print_check(CheckResult const& r, std::ostream& out) {
  out << (r.passed ? "PASS" : "FAIL") << ": " << r.name;
  if (!r.passed && !r.detail.empty()) out << " " << r.detail;
  out << " [" << r.cases << " cases, " << static_cast<long>(r.seconds * 1000) << " ms]\n";
}

void print_summary(VerifyReport const& report, std::ostream& out) {
  std::size_t passed = 0;
  for (auto const& c : report.checks) passed += c.passed ? 1 : 0;
  out << passed << "/" << report.checks.size() << " checks passed\n"
      << "memo entries: d=" << report.d_entries << " b=" << report.b_entries << " c=" << report.c_entries
      << " Q=" << report.q_entries << "; exact divisions: " << report.divisions << "\n";
}

VerifyReport run_verify(VerifyLevel level, Tables& t, std::ostream* progress) {
  VerifyReport report;
  auto B = [level](i64 full) { return level == VerifyLevel::quick ? (full + 1) / 2 : full; };
  Rng rng(0x5eed2024);

  auto run = [&](std::string name, auto&& body) {
    CheckResult r;
    r.name = std::move(name);
    Probe probe;
    auto start = std::chrono::steady_clock::now();
    try {
      body(probe);
      r.passed = probe.failure.empty();
      r.detail = probe.failure;
    } catch (std::exception const& e) {
      r.passed = false;
      r.detail = std::string("raised: ") + e.what();
    }
    r.cases = probe.cases;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) print_check(r, *progress);
    report.checks.push_back(std::move(r));
  };

  // ---- exact algebra
  run("laurent-ring-identities", [&](Probe& p) {
    for (i64 trial = 0; trial < B(200); ++trial) {
      LaurentPoly a = rng.laurent(), b = rng.laurent(), c = rng.laurent();
      auto where = [&] { return "(trial " + std::to_string(trial) + ")"; };
      p.expect((a + b) * c == a * c + b * c, where);
      p.expect(a * b == b * a, where);
      p.expect((a * b) * c == a * (b * c), where);
      p.expect((a + -a).is_zero(), where);
    }
  });
  run("laurent-exact-division", [&](Probe& p) {
    for (i64 trial = 0; trial < B(200); ++trial) {
      LaurentPoly a = rng.laurent();
      LaurentPoly d = rng.nonzero_laurent(trial % 3 == 0 ? 2 : 6);
      LaurentPoly prod = a * d;
      p.expect(exact_div(prod, d) == a && exact_div_leading_term(prod, d) == a,
               [&] { return "(trial " + std::to_string(trial) + ")"; });
    }
  });
  run("eval-one-homomorphism", [&](Probe& p) {
    for (i64 trial = 0; trial < B(200); ++trial) {
      LaurentPoly a = rng.laurent(), b = rng.laurent();
      p.expect(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b) && eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b),
               [&] { return "(trial " + std::to_string(trial) + ")"; });
    }
  });
  run("canonical-text-roundtrip", [&](Probe& p) {
    for (i64 trial = 0; trial < B(200); ++trial) {
      LaurentPoly a = rng.laurent();
      GradedPoly g = rng.homogeneous(static_cast<std::uint32_t>(trial % 5)) + rng.homogeneous(2);
      std::string sa = to_canonical(a);
      std::string sg = to_canonical(g);
      p.expect(parse_laurent(sa) == a && to_canonical(parse_laurent(sa)) == sa && parse_graded(sg) == g &&
                   to_canonical(parse_graded(sg)) == sg,
               [&] { return "(trial " + std::to_string(trial) + ")"; });
    }
  });
  run("graded-homogeneity", [&](Probe& p) {
    for (i64 trial = 0; trial < B(100); ++trial) {
      auto d1 = static_cast<std::uint32_t>(rng.uniform(0, 4));
      auto d2 = static_cast<std::uint32_t>(rng.uniform(0, 4));
      GradedPoly x = rng.homogeneous(d1), y = rng.homogeneous(d1), z = rng.homogeneous(d2);
      p.expect((x + y).is_homogeneous(d1) && (x * z).is_homogeneous(d1 + d2),
               [&] { return "(trial " + std::to_string(trial) + ")"; });
    }
  });

  // ---- Weyl group bookkeeping
  run("demazure-reduced-words", [&](Probe& p) {
    for (i64 n = 0; n <= B(50); ++n) {
      WeylWord w = reduced_word(static_cast<std::size_t>(n));
      bool ok = w.is_reduced() && w.length() == static_cast<std::size_t>(n) &&
                demazure_product(w.letters) == w && (n == 0 || w.letters.back() == Letter::s0);
      p.expect(ok, [&] { return at({{"n", n}}); });
    }
  });
  run("demazure-fold-consistency", [&](Probe& p) {
    for (i64 trial = 0; trial < B(300); ++trial) {
      auto u = rng.letters(12);
      auto v = rng.letters(12);
      std::vector<Letter> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      std::vector<Letter> folded = demazure_product(u).letters;
      folded.insert(folded.end(), v.begin(), v.end());
      DemazureState s;
      for (Letter l : uv) s = s.append(l);
      WeylWord direct = demazure_product(uv);
      p.expect(direct == demazure_product(folded) && direct.is_reduced() && s.collapsed_len == direct.length(),
               [&] { return "(trial " + std::to_string(trial) + ")"; });
    }
  });
  run("q-weights-distinct-monotone", [&](Probe& p) {
    for (i64 m = 0; m <= B(50); ++m) {
      p.expect(q(m + 2).a0 > q(m).a0 && q(m + 2).a1 > q(m).a1, [&] { return at({{"m", m}}); });
      for (i64 k = 0; k < m; ++k) p.expect(q(k) != q(m), [&] { return at({{"k", k}, {"m", m}}); });
    }
  });
  run("fundamental-weight-orbit", [&](Probe& p) {
    for (i64 i = 1; i <= B(50); ++i)
      p.expect(w_lambda0(i - 1) - w_lambda0(i) == w_lambda0_diff(i), [&] { return at({{"i", i}}); });
    for (i64 m = 0; m <= B(50); ++m) p.expect(-w_lambda0(m) == q(m), [&] { return at({{"m", m}}); });
  });

  // ---- LS paths and the divisor row
  run("ls-path-count", [&](Probe& p) {
    for (i64 l = 0; l <= B(16); ++l)
      for (i64 m = 0; m <= l; ++m) {
        std::size_t expected = l == m ? 1 : (m == 0 ? 0 : binomial(l - 1, m - 1).get_ui());
        p.expect(enumerate_paths(l, m).size() == expected, [&] { return at({{"l", l}, {"m", m}}); });
      }
  });
  run("chevalley-path-count", [&](Probe& p) {
    for (i64 k = 2; k <= B(16); ++k)
      for (i64 m = 1; m < k; ++m) {
        std::size_t total = enumerate_paths(k, m).size() + enumerate_paths(k - 1, m).size();
        p.expect(Integer(static_cast<unsigned long>(total)) == binomial(k - 1, m - 1) + binomial(k - 2, m - 1),
                 [&] { return at({{"k", k}, {"m", m}}); });
      }
  });
  run("divisor-eval-at-one", [&](Probe& p) {
    for (i64 k = 2; k <= B(16); ++k)
      for (i64 m = 1; m < k; ++m)
        p.expect(eval_at_one(d_divisor(k, m)) == d_ordinary_divisor(k, m), [&] { return at({{"k", k}, {"m", m}}); });
  });
  run("divisor-diagonal-and-support", [&](Probe& p) {
    for (i64 m = 0; m <= B(16); ++m) {
      p.expect(d_divisor(m, m) == LaurentPoly(1) - LaurentPoly::monomial(q(m)), [&] { return at({{"m", m}}); });
      for (i64 k = 0; k < m; ++k) p.expect(d_divisor(k, m).is_zero(), [&] { return at({{"k", k}, {"m", m}}); });
    }
  });
  run("divisor-vs-localization", [&](Probe& p) {
    for (i64 m = 1; m <= B(12); ++m) p.expect(d_divisor(m, m) == d_base(1, m), [&] { return at({{"m", m}}); });
  });

  // ---- localization
  run("localization-dp-vs-bruteforce", [&](Probe& p) {
    for (i64 m = 0; m <= B(12); ++m)
      for (i64 n = 0; n <= m; ++n)
        p.expect(d_base(n, m) == d_base_bruteforce(n, m), [&] { return at({{"n", n}, {"m", m}}); });
  });
  run("localization-eval-zero", [&](Probe& p) {
    for (i64 m = 1; m <= B(12); ++m)
      for (i64 n = 1; n <= m; ++n) p.expect(eval_at_one(d_base(n, m)) == 0, [&] { return at({{"n", n}, {"m", m}}); });
  });

  // ---- equivariant and ordinary K-theory
  run("recursion-vs-closed-form", [&](Probe& p) {
    for (i64 n = 1; n <= B(5); ++n)
      for (i64 m = 1; m <= B(5); ++m)
        for (i64 k = std::max(n, m); k <= B(10); ++k)
          p.expect(t.k.d_ordinary(n, m, k) == d_ordinary_at(n, m, k), [&] { return at({{"n", n}, {"m", m}, {"k", k}}); });
  });
  run("k-associativity", [&](Probe& p) {
    for (i64 a = 0; a <= B(3); ++a)
      for (i64 b = 0; b <= B(3); ++b)
        for (i64 c = 0; c <= B(3); ++c)
          for (i64 k = 0; k <= B(9); ++k) {
            LaurentPoly lhs, rhs;
            for (i64 i = 0; i <= k; ++i) lhs += t.k.d(a, b, i) * t.k.d(i, c, k);
            for (i64 j = 0; j <= k; ++j) rhs += t.k.d(b, c, j) * t.k.d(a, j, k);
            p.expect(lhs == rhs, [&] { return at({{"a", a}, {"b", b}, {"c", c}, {"k", k}}); });
          }
  });
  run("k-symmetry", [&](Probe& p) {
    KTheoryTable ordered(KTheoryTable::Options{.symmetrize = false});
    for (i64 n = 1; n <= B(5); ++n)
      for (i64 m = n + 1; m <= B(5); ++m)
        for (i64 k = m; k <= B(10); ++k) {
          LaurentPoly forward = ordered.d(n, m, k);
          LaurentPoly backward = ordered.d(m, n, k);
          p.expect(forward == backward && forward == t.k.d(n, m, k), [&] { return at({{"n", n}, {"m", m}, {"k", k}}); });
        }
  });
  run("divisor-consistency", [&](Probe& p) {
    for (i64 m = 0; m <= B(10); ++m)
      for (i64 k = 0; k <= B(10); ++k)
        p.expect(t.k.d(1, m, k) == (m == 0 ? LaurentPoly(k == 1 ? 1 : 0) : d_divisor(k, m)),
                 [&] { return at({{"m", m}, {"k", k}}); });
  });
  run("base-consistency", [&](Probe& p) {
    for (i64 m = 0; m <= B(10); ++m)
      for (i64 n = 0; n <= m; ++n) p.expect(t.k.d(n, m, m) == d_base(n, m), [&] { return at({{"n", n}, {"m", m}}); });
  });
  run("xi-increment", [&](Probe& p) {
    for (i64 n = 0; n <= B(4); ++n)
      for (i64 m = 0; m <= B(4); ++m)
        for (i64 k = 0; k <= B(9); ++k) {
          LaurentPoly four = t.k.d(n, m, k) - t.k.d(n + 1, m, k) - t.k.d(n, m + 1, k) + t.k.d(n + 1, m + 1, k);
          p.expect(t.k.b(n, m, k) - t.k.b(n, m, k - 1) == four, [&] { return at({{"n", n}, {"m", m}, {"k", k}}); });
        }
  });
  run("xi-ordinary-closed-form", [&](Probe& p) {
    for (i64 n = 0; n <= B(4); ++n)
      for (i64 m = 0; m <= B(4); ++m)
        for (i64 k = 0; k <= B(9); ++k) {
          Integer expected = k < n + m ? Integer(0) : b_ordinary_closed(n, m, k - n - m);
          p.expect(t.k.b_ordinary(n, m, k) == expected, [&] { return at({{"n", n}, {"m", m}, {"k", k}}); });
        }
  });
  run("four-term-identity", [&](Probe& p) {
    for (i64 n = 1; n <= B(6); ++n)
      for (i64 m = 1; m <= B(6); ++m) {
        Integer partial = 0;
        for (i64 j = 0; j <= B(6); ++j) {
          partial += dddd_rhs(n, m, j);
          p.expect(dddd_identity_check(n, m, j) && partial == b_ordinary_closed(n, m, j),
                   [&] { return at({{"n", n}, {"m", m}, {"j", j}}); });
        }
      }
  });
  run("ordinary-base-cases", [&](Probe& p) {
    for (i64 k = 2; k <= B(16); ++k)
      for (i64 m = 1; m < k; ++m)
        p.expect(d_ordinary_closed(1, m, k - 1 - m) == d_ordinary_divisor(k, m), [&] { return at({{"k", k}, {"m", m}}); });
    for (i64 n = 1; n <= B(8); ++n)
      for (i64 m = 1; m <= B(8); ++m)
        p.expect(d_ordinary_closed(n, m, 0) == binomial(n + m, n), [&] { return at({{"n", n}, {"m", m}}); });
  });

  // ---- cohomology
  run("cohomology-degree-support-symmetry", [&](Probe& p) {
    for (i64 n = 0; n <= B(8); ++n)
      for (i64 m = 0; m <= B(8); ++m)
        for (i64 k = 0; k <= n + m + 1; ++k) {
          GradedPoly v = t.h.c(n, m, k);
          bool inside = k >= std::max(n, m) && k <= n + m;
          bool ok = v == t.h.c(m, n, k) && v.has_integer_coefficients() &&
                    (inside ? v.is_homogeneous(static_cast<std::uint32_t>(n + m - k)) && !v.is_zero() : v.is_zero());
          p.expect(ok, [&] { return at({{"n", n}, {"m", m}, {"k", k}}); });
        }
  });
  run("cohomology-closed-forms", [&](Probe& p) {
    for (i64 n = 1; n <= B(8); ++n)
      for (i64 m = 1; m <= B(8); ++m) {
        auto where = [&] { return at({{"n", n}, {"m", m}}); };
        p.expect(t.h.c(n, m, n + m) == GradedPoly(Rational(binomial(n + m, n))), where);
        p.expect(t.h.c(n, m, n + m - 1) == c_top_minus_1(n, m), where);
        if (n >= 2 && m >= 2) p.expect(t.h.c(n, m, n + m - 2) == c_top_minus_2(n, m), where);
        if (n <= m) p.expect(t.h.c(n, m, m) == c_bottom(n, m), where);
      }
  });
  run("Q-vs-multisets", [&](Probe& p) {
    for (i64 d = 0; d <= B(4); ++d)
      for (i64 i = 1; i <= B(4); ++i)
        for (i64 j = 0; j <= B(6); ++j)
          p.expect(t.h.Q(d, i, j) == q_multiset_sum(d, i, j), [&] { return at({{"d", d}, {"i", i}, {"j", j}}); });
  });
  run("Q1-closed-form", [&](Probe& p) {
    for (i64 i = 1; i <= B(24); ++i)
      for (i64 j = 0; i + j <= B(24); ++j) {
        GradedPoly direct = q_direct_sum(i, i + j);
        p.expect(Q1_closed(i, j) == direct && t.h.Q(1, i, j) == direct, [&] { return at({{"i", i}, {"j", j}}); });
      }
  });
  run("sumq-closed-form", [&](Probe& p) {
    for (i64 k = 0; k <= B(24); ++k) p.expect(sumq_closed(k) == q_direct_sum(1, k), [&] { return at({{"k", k}}); });
  });
  run("cohomology-associativity", [&](Probe& p) {
    for (i64 a = 0; a <= B(3); ++a)
      for (i64 b = 0; b <= B(3); ++b)
        for (i64 c = 0; c <= B(3); ++c)
          for (i64 k = 0; k <= a + b + c; ++k) {
            GradedPoly lhs, rhs;
            for (i64 i = 0; i <= k; ++i) lhs += t.h.c(a, b, i) * t.h.c(i, c, k);
            for (i64 j = 0; j <= k; ++j) rhs += t.h.c(b, c, j) * t.h.c(a, j, k);
            p.expect(lhs == rhs, [&] { return at({{"a", a}, {"b", b}, {"c", c}, {"k", k}}); });
          }
  });
  run("euler-class-identities", [&](Probe& p) {
    p.expect(euler_class_identities(t.h, B(6), B(6)), [] { return std::string("expansion mismatch"); });
  });

  // ---- links between the theories
  run("top-class-cross-theory", [&](Probe& p) {
    for (i64 n = 0; n <= B(5); ++n)
      for (i64 m = 0; m <= B(5); ++m) {
        Integer top = binomial(n + m, n);
        p.expect(t.h.c(n, m, n + m) == GradedPoly(Rational(top)) && t.k.d_ordinary(n, m, n + m) == top,
                 [&] { return at({{"n", n}, {"m", m}}); });
      }
  });
  run("bottom-class-cross-theory", [&](Probe& p) {
    for (i64 m = 1; m <= B(6); ++m)
      for (i64 n = 1; n <= m; ++n) {
        GradedPoly low = lowest_graded_part(d_base(n, m));
        if (n % 2 != 0) low = -low;
        p.expect(low.is_homogeneous(static_cast<std::uint32_t>(n)) && low == c_bottom(n, m) && low == t.h.c(n, m, m),
                 [&] { return at({{"n", n}, {"m", m}}); });
      }
  });

  report.d_entries = t.k.d_entries().size();
  report.b_entries = t.k.b_entries().size();
  report.c_entries = t.h.entries().size();
  report.q_entries = t.h.q_memo_size();
  report.divisions = t.k.divisions();
  return report;
}

}  // namespace affsl2

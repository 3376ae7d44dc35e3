#include "affsl2/text_format.hpp"

#include <charconv>
#include <vector>

#include "affsl2/errors.hpp"

namespace affsl2 {
namespace {

std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> out;
  constexpr std::string_view sep = " + ";
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("bad integer literal '" + std::string(s) + "'");
  return Integer(std::string(s));
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string_view den_text = s.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-') throw ParseError("bad denominator in '" + std::string(s) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t parse_int64(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("bad exponent '" + std::string(s) + "'");
  return v;
}

void expect_prefix(std::string_view& s, std::string_view prefix, std::string_view term) {
  if (s.substr(0, prefix.size()) != prefix)
    throw ParseError("malformed term '" + std::string(term) + "'");
  s.remove_prefix(prefix.size());
}

std::string rational_text(Rational const& r) { return r.get_str(); }

// Leading sign handling shared by the pretty and LaTeX renderers.
std::string join_signed(std::vector<std::pair<bool, std::string>> const& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto const& [negative, body] = parts[i];
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
  }
  return out.empty() ? "0" : out;
}

std::string weight_latex(Weight const& w) {
  std::string out;
  auto piece = [&](std::int64_t c, char const* sym) {
    if (c == 0) return;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += sym;
  };
  piece(w.a0, "\\alpha_0");
  piece(w.a1, "\\alpha_1");
  return out;
}

std::string graded_monomial(Monomial m, char const* a0, char const* a1, bool latex) {
  std::string out;
  auto power = [&](std::uint32_t e, char const* sym) {
    if (e == 0) return;
    if (!out.empty() && !latex) out += "*";
    out += sym;
    if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  };
  power(m.i, a0);
  power(m.j, a1);
  return out;
}

}  // namespace

std::string to_canonical(LaurentPoly const& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto const& [w, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*E[" + std::to_string(w.a0) + "," + std::to_string(w.a1) + "]";
  }
  return out;
}

std::string to_canonical(GradedPoly const& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto const& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += rational_text(c) + "*A0^" + std::to_string(m.i) + "*A1^" + std::to_string(m.j);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  if (text == "0") return {};
  LaurentPoly p;
  for (std::string_view term : split_terms(text)) {
    auto star = term.find("*E[");
    if (star == std::string_view::npos || term.back() != ']')
      throw ParseError("malformed term '" + std::string(term) + "'");
    Integer c = parse_integer(term.substr(0, star));
    std::string_view rest = term.substr(star + 3, term.size() - star - 4);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ParseError("malformed term '" + std::string(term) + "'");
    p.add_term({parse_int64(rest.substr(0, comma)), parse_int64(rest.substr(comma + 1))}, c);
  }
  return p;
}

GradedPoly parse_graded(std::string_view text) {
  if (text == "0") return {};
  GradedPoly p;
  for (std::string_view term : split_terms(text)) {
    auto star = term.find("*A0^");
    if (star == std::string_view::npos) throw ParseError("malformed term '" + std::string(term) + "'");
    Rational c = parse_rational(term.substr(0, star));
    std::string_view rest = term.substr(star);
    expect_prefix(rest, "*A0^", term);
    auto star2 = rest.find("*A1^");
    if (star2 == std::string_view::npos) throw ParseError("malformed term '" + std::string(term) + "'");
    std::int64_t i = parse_int64(rest.substr(0, star2));
    rest.remove_prefix(star2);
    expect_prefix(rest, "*A1^", term);
    std::int64_t j = parse_int64(rest);
    if (i < 0 || j < 0) throw ParseError("negative exponent in '" + std::string(term) + "'");
    p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, c);
  }
  return p;
}

std::string to_pretty(LaurentPoly const& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (auto const& [w, c] : p.terms()) {
    Integer a = abs(c);
    std::string body;
    if (w.is_zero()) {
      body = a.get_str();
    } else {
      body = "E[" + std::to_string(w.a0) + "," + std::to_string(w.a1) + "]";
      if (a != 1) body = a.get_str() + "*" + body;
    }
    parts.emplace_back(c < 0, body);
  }
  return join_signed(parts);
}

std::string to_pretty(GradedPoly const& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (auto const& [m, c] : p.terms()) {
    Rational a = abs(c);
    std::string mono = graded_monomial(m, "A0", "A1", false);
    std::string body;
    if (mono.empty())
      body = a.get_str();
    else
      body = a == 1 ? mono : a.get_str() + "*" + mono;
    parts.emplace_back(c < 0, body);
  }
  return join_signed(parts);
}

std::string to_latex(Rational const& r) {
  Rational a = abs(r);
  std::string body = a.get_den() == 1 ? a.get_num().get_str()
                                      : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return r < 0 ? "-" + body : body;
}

std::string to_latex(LaurentPoly const& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (auto const& [w, c] : p.terms()) {
    Integer a = abs(c);
    std::string body;
    if (w.is_zero()) {
      body = a.get_str();
    } else {
      body = "e^{" + weight_latex(w) + "}";
      if (a != 1) body = a.get_str() + body;
    }
    parts.emplace_back(c < 0, body);
  }
  return join_signed(parts);
}

std::string to_latex(GradedPoly const& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (auto const& [m, c] : p.terms()) {
    std::string mono = graded_monomial(m, "\\alpha_0", "\\alpha_1", true);
    std::string coef = to_latex(Rational(abs(c)));
    std::string body = mono.empty() ? coef : (abs(c) == 1 ? mono : coef + mono);
    parts.emplace_back(c < 0, body);
  }
  return join_signed(parts);
}

}  // namespace affsl2

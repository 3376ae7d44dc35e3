#include "affsl2/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <ostream>

#include "affsl2/errors.hpp"
#include "affsl2/text_format.hpp"

namespace affsl2 {
namespace {

constexpr std::array<std::pair<Theory, std::string_view>, 5> kTheoryNames{{
    {Theory::k_equivariant, "k-equivariant"},
    {Theory::k_ordinary, "k-ordinary"},
    {Theory::xi_equivariant, "xi-equivariant"},
    {Theory::xi_ordinary, "xi-ordinary"},
    {Theory::cohomology, "cohomology"},
}};

constexpr std::array<std::pair<Format, std::string_view>, 4> kFormatNames{{
    {Format::plain, "plain"},
    {Format::latex, "latex"},
    {Format::csv, "csv"},
    {Format::json, "json"},
}};

template <typename... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::int64_t parse_index(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw BadRequest("bad index '" + std::string(s) + "'");
  return v;
}

std::int64_t support_end(Theory theory, std::int64_t n, std::int64_t m, std::int64_t kmax) {
  return theory == Theory::cohomology ? std::min(kmax, n + m) : kmax;
}

std::string csv_cell(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Row {
  std::int64_t n;
  std::int64_t m;
  std::int64_t kstart;
  std::int64_t kend;
};

std::vector<Row> rows_of(TableRequest const& req) {
  std::vector<Row> rows;
  for (std::int64_t n = req.n.lo; n <= req.n.hi; ++n)
    for (std::int64_t m = req.m.lo; m <= req.m.hi; ++m)
      rows.push_back({n, m, support_start(req.theory, n, m), support_end(req.theory, n, m, req.kmax)});
  return rows;
}

}  // namespace

std::string_view to_string(Theory t) {
  for (auto const& [v, name] : kTheoryNames)
    if (v == t) return name;
  return "unknown";
}

Theory parse_theory(std::string_view s) {
  for (auto const& [v, name] : kTheoryNames)
    if (name == s) return v;
  throw BadRequest("unknown theory '" + std::string(s) + "'");
}

std::string_view to_string(Format f) {
  for (auto const& [v, name] : kFormatNames)
    if (v == f) return name;
  return "unknown";
}

Format parse_format(std::string_view s) {
  for (auto const& [v, name] : kFormatNames)
    if (name == s) return v;
  throw BadRequest("unknown format '" + std::string(s) + "'");
}

IndexRange parse_range(std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    std::int64_t v = parse_index(s);
    return {v, v};
  }
  return {parse_index(s.substr(0, dots)), parse_index(s.substr(dots + 2))};
}

void TableRequest::validate() const {
  for (auto const& [name, r] : {std::pair{"n", n}, std::pair{"m", m}}) {
    if (r.lo < 0) throw BadRequest(std::string("negative ") + name + " index");
    if (r.lo > r.hi) throw BadRequest(std::string("empty ") + name + " range");
  }
  if (kmax < 0) throw BadRequest("kmax must be nonnegative");
}

std::string value_pretty(Value const& v) {
  return std::visit(overloaded{[](Integer const& i) { return i.get_str(); },
                               [](auto const& p) { return to_pretty(p); }},
                    v);
}

std::string value_canonical(Value const& v) {
  return std::visit(overloaded{[](Integer const& i) { return i.get_str(); },
                               [](auto const& p) { return to_canonical(p); }},
                    v);
}

std::string value_latex(Value const& v) {
  return std::visit(overloaded{[](Integer const& i) { return i.get_str(); },
                               [](auto const& p) { return to_latex(p); }},
                    v);
}

nlohmann::json value_to_json(Value const& v) {
  return std::visit(
      overloaded{
          [](Integer const& i) { return nlohmann::json(i.get_str()); },
          [](LaurentPoly const& p) {
            nlohmann::json terms = nlohmann::json::array();
            for (auto const& [w, c] : p.terms()) terms.push_back({{"a0", w.a0}, {"a1", w.a1}, {"coeff", c.get_str()}});
            return nlohmann::json{{"terms", terms}};
          },
          [](GradedPoly const& p) {
            nlohmann::json terms = nlohmann::json::array();
            for (auto const& [mono, c] : p.terms())
              terms.push_back({{"i", mono.i}, {"j", mono.j}, {"coeff", c.get_str()}});
            return nlohmann::json{{"terms", terms}};
          },
      },
      v);
}

LaurentPoly laurent_from_json(nlohmann::json const& j) {
  LaurentPoly p;
  for (auto const& t : j.at("terms"))
    p.add_term({t.at("a0").get<std::int64_t>(), t.at("a1").get<std::int64_t>()},
               Integer(t.at("coeff").get<std::string>()));
  return p;
}

GradedPoly graded_from_json(nlohmann::json const& j) {
  GradedPoly p;
  for (auto const& t : j.at("terms")) {
    Rational c(t.at("coeff").get<std::string>());
    c.canonicalize();
    p.add_term({t.at("i").get<std::uint32_t>(), t.at("j").get<std::uint32_t>()}, c);
  }
  return p;
}

void render_table(Tables& tables, TableRequest const& req, std::ostream& out) {
  req.validate();
  std::vector<Row> const rows = rows_of(req);

  switch (req.format) {
    case Format::plain:
      for (auto const& r : rows) {
        out << "n=" << r.n << " m=" << r.m << ":";
        for (std::int64_t k = r.kstart; k <= r.kend; ++k) {
          out << (k == r.kstart ? " " : "; ") << "k=" << k << ": "
              << value_pretty(compute(tables, req.theory, r.n, r.m, k));
        }
        out << "\n";
      }
      break;

    case Format::csv:
      out << "n,m";
      for (std::int64_t k = 0; k <= req.kmax; ++k) out << ",k=" << k;
      out << "\n";
      for (auto const& r : rows) {
        out << r.n << "," << r.m;
        for (std::int64_t k = 0; k <= req.kmax; ++k) {
          bool const inside = k >= r.kstart && k <= r.kend;
          out << "," << (inside ? csv_cell(value_canonical(compute(tables, req.theory, r.n, r.m, k))) : "0");
        }
        out << "\n";
      }
      break;

    case Format::latex: {
      std::int64_t kmin = req.kmax + 1;
      for (auto const& r : rows) kmin = std::min(kmin, r.kstart);
      out << "\\begin{tabular}{l|" << std::string(static_cast<std::size_t>(std::max<std::int64_t>(req.kmax - kmin + 1, 0)), 'c')
          << "}\n$(n,m)$";
      for (std::int64_t k = kmin; k <= req.kmax; ++k) out << " & $k=" << k << "$";
      out << " \\\\\n\\hline\n";
      for (auto const& r : rows) {
        out << "$(" << r.n << "," << r.m << ")$";
        for (std::int64_t k = kmin; k <= req.kmax; ++k) {
          bool const inside = k >= r.kstart && k <= r.kend;
          out << " & $" << (inside ? value_latex(compute(tables, req.theory, r.n, r.m, k)) : "0") << "$";
        }
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
    }

    case Format::json: {
      nlohmann::json doc;
      doc["theory"] = std::string(to_string(req.theory));
      doc["kmax"] = req.kmax;
      nlohmann::json jrows = nlohmann::json::array();
      for (auto const& r : rows) {
        nlohmann::json entries = nlohmann::json::array();
        for (std::int64_t k = r.kstart; k <= r.kend; ++k)
          entries.push_back({{"k", k}, {"value", value_to_json(compute(tables, req.theory, r.n, r.m, k))}});
        jrows.push_back({{"n", r.n}, {"m", r.m}, {"entries", entries}});
      }
      doc["rows"] = jrows;
      out << doc.dump(2) << "\n";
      break;
    }
  }
}

void render_entry(Tables& tables, Theory theory, std::int64_t n, std::int64_t m, std::int64_t k, Format format,
                  std::ostream& out) {
  if (n < 0 || m < 0 || k < 0) throw BadRequest("indices must be nonnegative");
  Value const v = compute(tables, theory, n, m, k);
  switch (format) {
    case Format::plain:
      out << value_pretty(v) << "\n";
      break;
    case Format::csv:
      out << "n,m,k,value\n" << n << "," << m << "," << k << "," << csv_cell(value_canonical(v)) << "\n";
      break;
    case Format::latex:
      out << "$" << value_latex(v) << "$\n";
      break;
    case Format::json: {
      nlohmann::json doc{{"theory", std::string(to_string(theory))}, {"n", n}, {"m", m}, {"k", k},
                         {"value", value_to_json(v)}};
      out << doc.dump(2) << "\n";
      break;
    }
  }
}

}  // namespace affsl2

#include "affsl2/cache.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "affsl2/closed_forms.hpp"
#include "affsl2/errors.hpp"
#include "affsl2/localization.hpp"
#include "affsl2/ls_paths.hpp"
#include "affsl2/ordinary.hpp"
#include "affsl2/text_format.hpp"

namespace affsl2 {
namespace {

using nlohmann::json;

struct Record {
  Theory theory;
  EntryKey key;
  std::string value;
  Provenance provenance;
};

struct Parsed {
  Theory theory;
  EntryKey key;
  Value value;
  Provenance provenance;
};

std::string label(std::size_t index, json const& rec) {
  std::string s = "record #" + std::to_string(index);
  if (rec.is_object() && rec.contains("theory") && rec.contains("n") && rec.contains("m") && rec.contains("k"))
    s += " (" + rec["theory"].dump() + " n=" + rec["n"].dump() + " m=" + rec["m"].dump() + " k=" + rec["k"].dump() +
         ")";
  return s;
}

std::int64_t read_index(json const& rec, char const* field) {
  json const& v = rec.at(field);
  if (!v.is_number_integer()) throw CorruptCache(std::string(field) + " is not an integer");
  std::int64_t i = v.get<std::int64_t>();
  if (i < 0) throw CorruptCache(std::string(field) + " is negative");
  return i;
}

// Throws CorruptCache (without record context) when the value violates an
// invariant of its family.
void validate(Parsed const& p) {
  auto const [n, m, k] = p.key;
  switch (p.theory) {
    case Theory::k_equivariant: {
      auto const& v = std::get<LaurentPoly>(p.value);
      if (k < std::max(n, m)) throw CorruptCache("entry below the support");
      if (eval_at_one(v) != d_ordinary_at(n, m, k)) throw CorruptCache("value at 1 disagrees with the ordinary closed form");
      std::int64_t const lo = std::min(n, m);
      std::int64_t const hi = std::max(n, m);
      if (k == hi && v != d_base(lo, hi)) throw CorruptCache("diagonal entry disagrees with localization");
      if (lo == 1 && v != d_divisor(k, hi)) throw CorruptCache("divisor entry disagrees with the Chevalley formula");
      break;
    }
    case Theory::xi_equivariant: {
      auto const& v = std::get<LaurentPoly>(p.value);
      if (eval_at_one(v) != b_ordinary_at(n, m, k)) throw CorruptCache("value at 1 disagrees with the ordinary closed form");
      break;
    }
    case Theory::cohomology: {
      auto const& v = std::get<GradedPoly>(p.value);
      std::int64_t const lo = std::min(n, m);
      std::int64_t const hi = std::max(n, m);
      if (k < hi || k > n + m) throw CorruptCache("entry outside the support");
      if (!v.has_integer_coefficients()) throw CorruptCache("fractional coefficient");
      if (!v.is_homogeneous(static_cast<std::uint32_t>(n + m - k))) throw CorruptCache("wrong degree");
      if (lo == 0) {
        if (v != GradedPoly(1)) throw CorruptCache("identity entry is not 1");
        break;
      }
      if (k == n + m && v != GradedPoly(Rational(binomial(n + m, n)))) throw CorruptCache("top entry disagrees");
      if (k == n + m - 1 && v != c_top_minus_1(lo, hi)) throw CorruptCache("entry disagrees with the top-1 closed form");
      if (k == n + m - 2 && lo >= 2 && v != c_top_minus_2(lo, hi))
        throw CorruptCache("entry disagrees with the top-2 closed form");
      if (k == hi && v != c_bottom(lo, hi)) throw CorruptCache("entry disagrees with the bottom closed form");
      break;
    }
    default:
      throw CorruptCache("theory is not cacheable");
  }
}

std::vector<Parsed> parse_document(std::string_view text) {
  std::vector<Parsed> out;
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return out;

  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw CorruptCache(std::string("cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CorruptCache("cache root is not an object");
  for (auto const& [field, v] : doc.items())
    if (field != "version" && field != "entries") throw CorruptCache("unknown top-level field '" + field + "'");
  if (!doc.contains("version")) throw CorruptCache("missing version field");
  if (doc["version"] != kCacheVersion) throw CorruptCache("unsupported cache version " + doc["version"].dump());
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw CorruptCache("missing entries array");

  static std::set<std::string> const fields{"theory", "n", "m", "k", "value", "provenance"};
  std::set<std::tuple<int, std::int64_t, std::int64_t, std::int64_t>> seen;
  std::size_t index = 0;
  for (json const& rec : doc["entries"]) {
    try {
      if (!rec.is_object()) throw CorruptCache("not an object");
      for (auto const& [field, v] : rec.items())
        if (!fields.contains(field)) throw CorruptCache("unknown field '" + field + "'");
      for (auto const& f : fields)
        if (!rec.contains(f)) throw CorruptCache("missing field '" + f + "'");
      if (!rec["theory"].is_string() || !rec["value"].is_string() || !rec["provenance"].is_string())
        throw CorruptCache("theory, value and provenance must be strings");

      Theory theory;
      try {
        theory = parse_theory(rec["theory"].get<std::string>());
      } catch (BadRequest const& e) {
        throw CorruptCache(e.what());
      }
      EntryKey key{read_index(rec, "n"), read_index(rec, "m"), read_index(rec, "k")};
      std::string const text_value = rec["value"].get<std::string>();

      Value value;
      Provenance provenance;
      try {
        provenance = parse_provenance(rec["provenance"].get<std::string>());
        if (theory == Theory::cohomology) {
          GradedPoly g = parse_graded(text_value);
          if (to_canonical(g) != text_value) throw CorruptCache("value is not in canonical form");
          value = std::move(g);
        } else {
          LaurentPoly l = parse_laurent(text_value);
          if (to_canonical(l) != text_value) throw CorruptCache("value is not in canonical form");
          value = std::move(l);
        }
      } catch (ParseError const& e) {
        throw CorruptCache(e.what());
      }

      Parsed p{theory, key, std::move(value), provenance};
      validate(p);
      auto lo = std::min(key.n, key.m);
      auto hi = std::max(key.n, key.m);
      if (!seen.emplace(static_cast<int>(theory), lo, hi, key.k).second) throw CorruptCache("duplicate entry");
      out.push_back(std::move(p));
    } catch (CorruptCache const& e) {
      throw CorruptCache(label(index, rec) + ": " + e.what());
    } catch (Error const& e) {
      throw CorruptCache(label(index, rec) + ": " + e.what());
    } catch (json::exception const& e) {
      throw CorruptCache(label(index, rec) + ": " + e.what());
    }
    ++index;
  }
  return out;
}

void count(CacheCounts& c, Theory t) {
  switch (t) {
    case Theory::k_equivariant:
      ++c.k_equivariant;
      break;
    case Theory::xi_equivariant:
      ++c.xi_equivariant;
      break;
    default:
      ++c.cohomology;
  }
}

}  // namespace

std::string cache_serialize(Tables const& tables) {
  std::vector<std::tuple<std::string, EntryKey, std::string, std::string>> rows;
  for (auto const& [key, e] : tables.k.d_entries())
    rows.emplace_back(std::string(to_string(Theory::k_equivariant)), key, to_canonical(e.value),
                      std::string(to_string(e.provenance)));
  for (auto const& [key, e] : tables.k.b_entries())
    rows.emplace_back(std::string(to_string(Theory::xi_equivariant)), key, to_canonical(e.value),
                      std::string(to_string(e.provenance)));
  for (auto const& [key, e] : tables.h.entries())
    rows.emplace_back(std::string(to_string(Theory::cohomology)), key, to_canonical(e.value),
                      std::string(to_string(e.provenance)));
  std::sort(rows.begin(), rows.end(), [](auto const& l, auto const& r) {
    return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r));
  });

  json entries = json::array();
  for (auto const& [theory, key, value, prov] : rows)
    entries.push_back(
        {{"theory", theory}, {"n", key.n}, {"m", key.m}, {"k", key.k}, {"value", value}, {"provenance", prov}});
  json doc{{"version", kCacheVersion}, {"entries", entries}};
  return doc.dump(2) + "\n";
}

CacheCounts cache_merge(Tables& tables, std::string_view text) {
  std::vector<Parsed> records = parse_document(text);
  CacheCounts counts;
  for (auto& p : records) {
    count(counts, p.theory);
    switch (p.theory) {
      case Theory::k_equivariant:
        tables.k.seed_d(p.key, {std::get<LaurentPoly>(std::move(p.value)), p.provenance});
        break;
      case Theory::xi_equivariant:
        tables.k.seed_b(p.key, {std::get<LaurentPoly>(std::move(p.value)), p.provenance});
        break;
      default:
        tables.h.seed(p.key, {std::get<GradedPoly>(std::move(p.value)), p.provenance});
    }
  }
  return counts;
}

CacheCounts cache_inspect(std::string_view text) {
  CacheCounts counts;
  for (auto const& p : parse_document(text)) count(counts, p.theory);
  return counts;
}

CacheCounts cache_load(Tables& tables, std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(path)) return {};
    throw IoError("cannot read cache file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return cache_merge(tables, buf.str());
}

void cache_store(Tables const& tables, std::filesystem::path const& path) {
  std::string const text = cache_serialize(tables);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + tmp.string());
    out << text;
    if (!out.flush()) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace cache file " + path.string() + ": " + ec.message());
}

}  // namespace affsl2

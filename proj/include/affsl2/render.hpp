#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "affsl2/tables.hpp"

namespace affsl2 {

enum class Format { plain, latex, csv, json };

std::string_view to_string(Format f);
Format parse_format(std::string_view s);  // throws BadRequest

/// Inclusive index range written "a" or "a..b".
struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

IndexRange parse_range(std::string_view s);  // throws BadRequest

struct TableRequest {
  Theory theory = Theory::k_equivariant;
  IndexRange n;
  IndexRange m;
  std::int64_t kmax = 0;
  Format format = Format::plain;
  std::optional<std::string> cache_path;

  /// Throws BadRequest for empty or negative ranges and negative kmax.
  void validate() const;
};

/// One row per (n, m) in range order, one column per k from the support
/// start up to kmax (cohomology additionally stops at n+m).
void render_table(Tables& tables, TableRequest const& req, std::ostream& out);

void render_entry(Tables& tables, Theory theory, std::int64_t n, std::int64_t m, std::int64_t k, Format format,
                  std::ostream& out);

// JSON records: Laurent and graded values become {"terms": [...]} with
// coefficients as decimal strings; integers become decimal strings.
nlohmann::json value_to_json(Value const& v);
LaurentPoly laurent_from_json(nlohmann::json const& j);
GradedPoly graded_from_json(nlohmann::json const& j);

std::string value_pretty(Value const& v);
std::string value_canonical(Value const& v);
std::string value_latex(Value const& v);

}  // namespace affsl2

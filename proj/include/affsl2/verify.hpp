#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "affsl2/tables.hpp"

namespace affsl2 {

enum class VerifyLevel { quick, full };

VerifyLevel parse_level(std::string_view s);  // throws BadRequest

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or exception text
  std::size_t cases = 0;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t d_entries = 0;
  std::size_t b_entries = 0;
  std::size_t c_entries = 0;
  std::size_t q_entries = 0;
  std::size_t divisions = 0;

  bool all_passed() const;
};

/// Runs every cross-check of the library against tables. quick halves every
/// index bound (rounding up). If progress is non-null each result is written
/// to it as soon as the check finishes.
VerifyReport run_verify(VerifyLevel level, Tables& tables, std::ostream* progress = nullptr);

void print_check(CheckResult const& r, std::ostream& out);
void print_summary(VerifyReport const& report, std::ostream& out);

}  // namespace affsl2

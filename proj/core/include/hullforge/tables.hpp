#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullforge/serialize.hpp"

namespace hullforge {

/// One expected row: request (k, h) and tuple [[n, kq, d; c]]_q.
struct TableRowExpectation {
  std::size_t k = 0;
  std::size_t h = 0;
  std::size_t n = 0;
  std::size_t kq = 0;
  std::size_t d = 0;
  std::size_t c = 0;
  std::uint64_t q = 0;
  /// Set when the printed distance is inconsistent with the row's own
  /// (n, k) and the Singleton equality; comparisons use the corrected value.
  std::optional<std::size_t> corrected_d;

  std::size_t expected_d() const noexcept { return corrected_d.value_or(d); }
};

struct TableSpec {
  int id = 0;
  std::uint64_t p = 0;
  unsigned e = 0;
  unsigned l = 0;
  std::uint64_t x1 = 0, x2 = 0, m = 0, r = 0;
  /// Point-set size; the code length is n plus the family's extra length.
  std::size_t n = 0;
  std::string caption;
  std::vector<TableRowExpectation> rows;
};

/// Tables 1..4; throws InvalidDimension for any other index.
const TableSpec& table_spec(int which);

/// Family realizing a row, chosen by the row's code length.
Family family_for_row(const TableSpec& table, const TableRowExpectation& row);
FamilyRequest request_for_row(const TableSpec& table, const TableRowExpectation& row);

struct TableRowResult {
  TableRowExpectation expected;
  Family family = Family::T1a;
  std::optional<EaqeccParams> measured;
  std::size_t hull_stacked = 0;
  std::size_t hull_rank = 0;
  bool match = false;
  std::string note;
  std::string error;
};

struct TableReport {
  int id = 0;
  std::vector<TableRowResult> rows;
  double seconds = 0;

  bool all_match() const noexcept;
  std::size_t mismatches() const noexcept;
};

/// Builds every row from scratch, measures its hull and compares the
/// derived tuple with the expectation.  Rows run in parallel; the output
/// order is the row order.
TableReport reproduce_table(int which, std::size_t threads = 0);

std::string table_report_text(const TableReport& report);
json table_report_to_json(const TableReport& report);

}  // namespace hullforge

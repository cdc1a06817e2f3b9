#include "hullforge/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "hullforge/parallel.hpp"

namespace hullforge {

namespace {

struct Raw {
  std::size_t k, h, n, kq, d, c;
};

// Rows as printed: {k, h, length, k', d, c}.
constexpr Raw kTable1[] = {
    {10, 1, 63, 9, 54, 52},  {12, 3, 63, 9, 52, 48},   {10, 2, 63, 8, 54, 51},  {12, 4, 63, 8, 52, 47},
    {10, 3, 63, 7, 54, 50},  {12, 5, 63, 7, 52, 46},   {10, 4, 63, 6, 54, 49},  {12, 6, 63, 6, 52, 45},
    {10, 5, 63, 5, 54, 48},  {12, 7, 63, 5, 52, 44},   {10, 6, 63, 4, 54, 47},  {12, 8, 63, 4, 52, 43},
    {10, 7, 63, 3, 54, 46},  {12, 9, 63, 3, 52, 42},   {10, 8, 63, 2, 54, 45},  {12, 10, 63, 2, 52, 41},
    {10, 9, 63, 1, 54, 44},  {12, 11, 63, 1, 52, 40},  {10, 10, 63, 0, 54, 43}, {12, 12, 63, 0, 52, 39},
    {11, 1, 63, 10, 53, 51}, {13, 1, 63, 12, 51, 49},  {11, 2, 63, 9, 53, 50},  {13, 2, 63, 11, 51, 48},
    {11, 3, 63, 8, 53, 49},  {13, 3, 63, 10, 51, 47},  {11, 4, 63, 7, 53, 48},  {13, 4, 63, 9, 51, 46},
    {11, 5, 63, 6, 53, 47},  {13, 5, 63, 8, 51, 45},   {11, 6, 63, 5, 53, 46},  {13, 6, 63, 7, 51, 44},
    {11, 7, 63, 4, 53, 45},  {13, 7, 63, 6, 51, 43},   {11, 8, 63, 3, 53, 44},  {13, 8, 63, 5, 51, 42},
    {11, 9, 63, 2, 53, 43},  {13, 9, 63, 4, 51, 41},   {11, 10, 63, 1, 53, 42}, {13, 10, 63, 3, 51, 40},
    {11, 11, 63, 0, 53, 41}, {13, 11, 63, 2, 51, 39},  {12, 1, 63, 11, 52, 50}, {13, 12, 63, 1, 51, 38},
    {12, 2, 63, 10, 52, 49}, {13, 13, 63, 0, 51, 37},
};

constexpr Raw kTable2[] = {
    {9, 1, 25, 8, 17, 15},   {11, 3, 25, 8, 15, 11},  {9, 2, 25, 7, 17, 14},  {11, 4, 25, 7, 15, 10},
    {9, 3, 25, 6, 17, 13},   {11, 5, 25, 6, 15, 9},   {9, 4, 25, 5, 17, 12},  {11, 6, 25, 5, 15, 8},
    {9, 5, 25, 4, 17, 11},   {11, 7, 25, 4, 15, 7},   {9, 6, 25, 3, 17, 10},  {11, 8, 25, 3, 15, 6},
    {9, 7, 25, 2, 17, 9},    {11, 9, 25, 2, 15, 5},   {9, 8, 25, 1, 17, 8},   {11, 10, 25, 1, 15, 4},
    {9, 9, 25, 0, 17, 7},    {11, 11, 25, 0, 15, 3},  {10, 1, 25, 9, 16, 14}, {12, 1, 25, 11, 14, 12},
    {10, 2, 25, 8, 16, 13},  {12, 2, 25, 10, 14, 11}, {10, 3, 25, 7, 16, 12}, {12, 3, 25, 9, 14, 10},
    {10, 4, 25, 6, 16, 11},  {12, 4, 25, 8, 14, 9},   {10, 5, 25, 5, 16, 10}, {12, 5, 25, 7, 14, 8},
    {10, 6, 25, 4, 16, 9},   {12, 6, 25, 6, 14, 7},   {10, 7, 25, 3, 16, 8},  {12, 7, 25, 5, 14, 6},
    {10, 8, 25, 2, 16, 7},   {12, 8, 25, 4, 14, 5},   {10, 9, 25, 1, 16, 6},  {12, 9, 25, 3, 14, 4},
    {10, 10, 25, 0, 16, 5},  {12, 10, 25, 2, 14, 3},  {11, 1, 25, 10, 15, 13}, {12, 11, 25, 1, 14, 2},
    {11, 2, 25, 9, 15, 12},  {12, 12, 25, 0, 14, 1},
};

constexpr Raw kTable3[] = {
    {20, 6, 80, 14, 61, 54},  {20, 13, 80, 7, 61, 47}, {20, 6, 81, 14, 62, 55},  {20, 13, 81, 7, 62, 48},
    {20, 6, 82, 14, 63, 56},  {20, 13, 82, 7, 62, 49}, {20, 7, 80, 13, 61, 53},  {20, 14, 80, 6, 61, 46},
    {20, 7, 81, 13, 62, 54},  {20, 14, 81, 6, 62, 47}, {20, 7, 82, 13, 63, 55},  {20, 14, 82, 6, 63, 48},
    {20, 8, 80, 12, 61, 52},  {20, 15, 80, 5, 61, 45}, {20, 8, 81, 12, 62, 53},  {20, 15, 81, 5, 62, 46},
    {20, 8, 82, 12, 63, 54},  {20, 15, 82, 5, 63, 47}, {20, 9, 80, 11, 61, 51},  {20, 16, 80, 4, 61, 44},
    {20, 9, 81, 11, 62, 52},  {20, 16, 81, 4, 62, 45}, {20, 9, 82, 11, 63, 53},  {20, 16, 82, 4, 63, 46},
    {20, 10, 80, 10, 61, 50}, {20, 17, 80, 3, 61, 43}, {20, 10, 81, 10, 62, 51}, {20, 17, 81, 3, 62, 44},
    {20, 10, 82, 10, 63, 52}, {20, 17, 82, 3, 63, 45}, {20, 11, 80, 9, 61, 49},  {20, 18, 80, 2, 61, 42},
    {20, 11, 81, 9, 62, 50},  {20, 18, 81, 2, 62, 43}, {20, 11, 82, 9, 63, 51},  {20, 18, 82, 2, 63, 44},
    {20, 12, 80, 8, 61, 48},  {20, 19, 80, 1, 61, 41}, {20, 12, 81, 8, 62, 49},  {20, 19, 81, 1, 62, 42},
    {20, 12, 82, 8, 63, 50},  {20, 19, 82, 1, 63, 43},
};

constexpr Raw kTable4[] = {
    {9, 1, 40, 8, 32, 30},  {10, 1, 40, 9, 31, 29}, {9, 1, 41, 8, 33, 31},  {10, 1, 41, 9, 32, 30},
    {9, 1, 42, 8, 34, 32},  {10, 1, 42, 9, 33, 31}, {9, 2, 40, 7, 32, 29},  {10, 2, 40, 8, 31, 28},
    {9, 2, 41, 7, 33, 30},  {10, 2, 41, 8, 32, 29}, {9, 2, 42, 7, 34, 31},  {10, 2, 42, 8, 33, 30},
    {9, 3, 40, 6, 32, 28},  {10, 3, 40, 7, 31, 27}, {9, 3, 41, 6, 33, 29},  {10, 3, 41, 7, 32, 28},
    {9, 3, 42, 6, 34, 30},  {10, 3, 42, 7, 33, 29}, {9, 4, 40, 5, 32, 27},  {10, 4, 40, 6, 31, 26},
    {9, 4, 41, 5, 33, 28},  {10, 4, 41, 6, 32, 27}, {9, 4, 42, 5, 34, 29},  {10, 4, 42, 6, 33, 28},
    {9, 5, 40, 4, 32, 26},  {10, 5, 40, 5, 31, 25}, {9, 5, 41, 4, 33, 27},  {10, 5, 41, 5, 32, 26},
    {9, 5, 42, 4, 34, 28},  {10, 5, 42, 5, 33, 27}, {9, 6, 40, 3, 32, 25},  {10, 6, 40, 4, 31, 24},
    {9, 6, 41, 3, 33, 26},  {10, 6, 41, 4, 32, 25}, {9, 6, 42, 3, 34, 27},  {10, 6, 42, 4, 33, 26},
    {9, 7, 40, 2, 32, 24},  {10, 7, 40, 3, 31, 23}, {9, 7, 41, 2, 33, 25},  {10, 7, 41, 3, 32, 24},
    {9, 7, 42, 2, 34, 26},  {10, 7, 42, 3, 33, 25},
};

template <std::size_t N>
std::vector<TableRowExpectation> rows_of(const Raw (&raw)[N], std::uint64_t q) {
  std::vector<TableRowExpectation> rows;
  for (const Raw& r : raw) rows.push_back({r.k, r.h, r.n, r.kq, r.d, r.c, q, std::nullopt});
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::tie(x.k, x.h, x.n) < std::tie(y.k, y.h, y.n);
  });
  return rows;
}

std::vector<TableSpec> build_specs() {
  std::vector<TableSpec> out(4);
  out[0] = {1, 2, 6, 2, 0, 0, 0, 0, 63, "q = 64, l = 2, n = 63 (T1a)", rows_of(kTable1, 64)};
  out[1] = {2, 5, 8, 2, 0, 0, 0, 0, 25, "q = 5^8, l = 2, n = 25 (T2)", rows_of(kTable2, 390625)};
  out[2] = {3, 3, 4, 1, 160, 3, 0, 1, 80, "q = 81, l = 1, x1 = 160, x2 = 3, r = 1 (T3n, T3n1, T3n2)",
            rows_of(kTable3, 81)};
  out[3] = {4, 3, 4, 1, 0, 0, 40, 1, 40, "q = 81, l = 1, m = 40, r = 1 (T4n, T4n1, T4n2)", rows_of(kTable4, 81)};
  // The printed [[82,7,62;49]] row contradicts its own Singleton equality
  // (82 + 49 - 7 = 124 = 2 * 62) and d = n - k + 3 = 63.
  for (auto& row : out[2].rows)
    if (row.k == 20 && row.h == 13 && row.n == 82 && row.d == 62) row.corrected_d = 63;
  return out;
}

}  // namespace

const TableSpec& table_spec(int which) {
  static const std::vector<TableSpec> specs = build_specs();
  if (which < 1 || which > 4) fail(ErrorCode::InvalidDimension, "table index must be 1..4");
  return specs[static_cast<std::size_t>(which - 1)];
}

Family family_for_row(const TableSpec& table, const TableRowExpectation& row) {
  const std::size_t extra = row.n - table.n;
  switch (table.id) {
    case 1:
      return Family::T1a;
    case 2:
      return Family::T2;
    case 3:
      return extra == 0 ? Family::T3n : extra == 1 ? Family::T3n1 : Family::T3n2;
    default:
      return extra == 0 ? Family::T4n : extra == 1 ? Family::T4n1 : Family::T4n2;
  }
}

FamilyRequest request_for_row(const TableSpec& table, const TableRowExpectation& row) {
  FamilyRequest req;
  req.family = family_for_row(table, row);
  req.p = table.p;
  req.e = table.e;
  req.l = table.l;
  req.n = table.n;
  req.k = row.k;
  req.h = row.h;
  req.x1 = table.x1;
  req.x2 = table.x2;
  req.m = table.m;
  req.r = table.r;
  return req;
}

bool TableReport::all_match() const noexcept { return mismatches() == 0; }

std::size_t TableReport::mismatches() const noexcept {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.match; }));
}

TableReport reproduce_table(int which, std::size_t threads) {
  const TableSpec& table = table_spec(which);
  const auto start = std::chrono::steady_clock::now();
  const FieldPtr F = Field::create(table.p, table.e);
  TableReport report;
  report.id = table.id;
  report.rows.resize(table.rows.size());
  parallel_for(
      table.rows.size(),
      [&](std::size_t i) {
        const TableRowExpectation& row = table.rows[i];
        TableRowResult& out = report.rows[i];
        out.expected = row;
        out.family = family_for_row(table, row);
        try {
          const FamilyEmission em = theorem_family_emit(F, request_for_row(table, row));
          out.measured = em.params;
          out.hull_stacked = em.construction.hull.dim_stacked;
          out.hull_rank = em.construction.hull.dim_rank;
          const EaqeccParams& m = em.params;
          out.match = m.n == row.n && m.k == row.kq && m.d == row.expected_d() && m.c == row.c && m.q == row.q;
          if (row.corrected_d) {
            out.note = "printed d = " + std::to_string(row.d) + " corrected to " + std::to_string(*row.corrected_d);
          }
        } catch (const Error& err) {
          out.error = err.what();
          out.match = false;
        }
      },
      threads);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string table_report_text(const TableReport& report) {
  const TableSpec& table = table_spec(report.id);
  std::ostringstream out;
  out << "Table " << report.id << ": " << table.caption << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%4s %4s  %-5s  %-24s  %-24s  %s\n", "k", "h", "fam", "expected", "measured",
                "status");
  out << line;
  for (const auto& r : report.rows) {
    EaqeccParams exp_tuple;
    exp_tuple.n = r.expected.n;
    exp_tuple.k = r.expected.kq;
    exp_tuple.d = r.expected.expected_d();
    exp_tuple.c = r.expected.c;
    exp_tuple.q = r.expected.q;
    const std::string measured = r.measured ? r.measured->to_string() : std::string("-");
    std::string status = r.match ? "ok" : "MISMATCH";
    if (!r.error.empty()) status += " (" + r.error + ")";
    if (!r.note.empty()) status += " [" + r.note + "]";
    std::snprintf(line, sizeof line, "%4zu %4zu  %-5s  %-24s  %-24s  ", r.expected.k, r.expected.h,
                  std::string(to_string(r.family)).c_str(), exp_tuple.to_string().c_str(), measured.c_str());
    out << line << status << "\n";
  }
  out << report.rows.size() - report.mismatches() << "/" << report.rows.size() << " rows match\n";
  return out.str();
}

json table_report_to_json(const TableReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row{{"k", r.expected.k},
             {"h", r.expected.h},
             {"family", std::string(to_string(r.family))},
             {"expected",
              {{"n", r.expected.n},
               {"k", r.expected.kq},
               {"d", r.expected.expected_d()},
               {"c", r.expected.c},
               {"q", r.expected.q}}},
             {"match", r.match}};
    if (r.expected.corrected_d) row["printed_d"] = r.expected.d;
    if (r.measured) {
      row["measured"] = eaqecc_to_json(*r.measured);
      row["hull_methods"] = {{"stacked", r.hull_stacked}, {"rankHH", r.hull_rank}};
    }
    if (!r.note.empty()) row["note"] = r.note;
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return json{{"table", report.id}, {"rows", std::move(rows)}, {"all_match", report.all_match()}};
}

}  // namespace hullforge

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hermiq/quantum.hpp"

namespace hermiq {

/// One comparison-catalog row: a Steane-enlarged symmetric code that keeps
/// the designed distance of the unenlarged construction while gaining
/// dim_increase logical dimensions.
struct Table1Row {
  int q;
  int n;
  int k;
  int d;
  int delta;
  int dim_increase;

  bool operator==(const Table1Row&) const = default;
};

/// Regenerates the n=8..343 comparison catalog: for every designed
/// delta in [2, q^2] whose one-step enlargement gains K >= 2 dimensions,
/// the record [[q^3, 2k - q^3 + K, delta]].
std::vector<Table1Row> table1_records(std::span<const int> qs);

/// Reference parameter tuples for the bundled catalog (36 rows).
std::span<const Table1Row> table1_reference();

struct Table2Cell {
  int d = 0;
  std::string construction;
};

/// One row of the q=4 technique-comparison table. Columns: one-point CSS
/// under the Goppa bound, one-point CSS under the relative order bound,
/// improved-code CSS, Steane-enlarged improved. `reference` holds the
/// bundled catalog values; any difference from the computed cells is
/// reported as a discrepancy.
struct Table2Row {
  int k = 0;
  std::array<Table2Cell, 4> cells;
  std::array<int, 4> reference{};
  std::array<bool, 4> star{};
};

std::vector<Table2Row> table2_records(const CurvePtr& curve);

struct Table2Discrepancy {
  int k;
  int column;  // 0-based
  int computed;
  int reference;
};

std::vector<Table2Discrepancy> table2_discrepancies(const std::vector<Table2Row>& rows);

inline constexpr std::array<const char*, 4> kTable2ColumnNames = {
    "goppa-bound", "order-bound", "improved-css", "improved-steane"};

}  // namespace hermiq

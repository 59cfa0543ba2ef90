#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqdist/report.hpp"

namespace eqdist {

enum class TableId { eq2, eq3, eq };
std::string_view to_string(TableId id);
std::optional<TableId> parse_table_id(std::string_view s);

struct GoldenRow {
  std::string graph;
  bool bold = false;
  std::vector<std::string> cells;  // bound columns then exact, "-" for not applicable
};

struct GoldenTable {
  TableId id = TableId::eq2;
  std::vector<std::string> columns;  // bound keys then "exact"
  std::vector<GoldenRow> rows;
};

/// Reads data/tables/table_<id>.csv.
GoldenTable load_golden(TableId id, const std::filesystem::path& data_dir);

// Known systematic differences get a label so a diff can be read at a glance:
//   phi-scale          printed value equals the Laplacian formula evaluated with 70 in place of n
//   haemers-disconnected-power  G^[#t] is regular but disconnected
//   floor-vs-print     printed value equals the raw bound rounded instead of floored
//   other              anything else
struct CellDiff {
  std::string graph;
  std::string column;
  std::string expected;
  std::string actual;
  std::string kind;
};

struct TableRowResult {
  GoldenRow golden;
  std::optional<BoundSuite> suite;
  bool bold = false;  // re-derived: some bound other than the degree bound equals the exact value
  std::string error;
};

struct TableReport {
  TableId id = TableId::eq2;
  std::vector<TableRowResult> rows;
  std::vector<std::string> skipped;  // golden rows with no constructor or catalog entry
  std::vector<CellDiff> diffs;

  std::size_t rows_matching() const;
};

struct TableOptions {
  std::filesystem::path data_dir;  // empty = default_data_dir()
  std::vector<std::string> only;   // restrict to these graph names (normalised match)
  unsigned threads = 0;
  SuiteOptions suite;
};

TableReport cmd_table(TableId id, const TableOptions& opt = {});

void render_table_report(const TableReport& rep, Format fmt, std::ostream& out);

}  // namespace eqdist

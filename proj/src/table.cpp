#include "eqdist/table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "eqdist/errors.hpp"
#include "eqdist/named.hpp"

namespace eqdist {

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::eq2: return "eq2";
    case TableId::eq3: return "eq3";
    case TableId::eq: return "eq";
  }
  return "unknown";
}

std::optional<TableId> parse_table_id(std::string_view s) {
  if (s == "eq2") return TableId::eq2;
  if (s == "eq3") return TableId::eq3;
  if (s == "eq") return TableId::eq;
  return std::nullopt;
}

std::size_t TableReport::rows_matching() const {
  std::size_t ok = 0;
  for (const auto& r : rows) {
    if (!r.suite) continue;
    const bool clean = std::none_of(diffs.begin(), diffs.end(), [&](const CellDiff& d) {
      return d.graph == r.golden.graph && d.column != "bold";
    });
    ok += clean;
  }
  return ok;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int table_t(TableId id) { return id == TableId::eq2 ? 2 : id == TableId::eq3 ? 3 : 0; }

std::string classify(const CellDiff& d, const BoundResult* r, const Graph& g, int t) {
  if (!r || !r->applicable()) return "other";
  long long expected = 0;
  try {
    expected = std::stoll(d.expected);
  } catch (...) {
    return "other";
  }
  if (d.column == "phi") {
    // raw = n(1 - q) + 1, so the same quantity with 70 in place of n is:
    const double scaled = 70.0 * (r->raw - 1.0) / static_cast<double>(g.order()) + 1.0;
    if (floor_bound(scaled) == expected) return "phi-scale";
  }
  if (d.column == "haemers" && t > 0 && !is_connected(exact_distance_power(g, t)))
    return "haemers-disconnected-power";
  if (std::llround(r->raw) == expected || static_cast<long long>(std::ceil(r->raw - 1e-9)) == expected)
    return "floor-vs-print";
  return "other";
}

}  // namespace

GoldenTable load_golden(TableId id, const std::filesystem::path& data_dir) {
  const auto path = data_dir / "tables" / ("table_" + std::string(to_string(id)) + ".csv");
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open golden table " + path.string());
  GoldenTable gt;
  gt.id = id;
  std::string line;
  std::getline(f, line);
  auto header = split_csv(line);
  if (header.size() < 3 || header[0] != "graph" || header[1] != "bold")
    throw DomainError("unexpected golden header in " + path.string());
  gt.columns.assign(header.begin() + 2, header.end());
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    auto cells = split_csv(line);
    if (cells.size() != header.size()) throw DomainError("ragged golden row: " + line);
    GoldenRow row;
    row.graph = cells[0];
    row.bold = cells[1] == "1";
    row.cells.assign(cells.begin() + 2, cells.end());
    gt.rows.push_back(std::move(row));
  }
  return gt;
}

TableReport cmd_table(TableId id, const TableOptions& opt) {
  const auto dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
  const auto golden = load_golden(id, dir);
  const int t = table_t(id);
  TableReport rep;
  rep.id = id;

  std::vector<std::optional<Graph>> graphs;
  for (const auto& row : golden.rows) {
    if (!opt.only.empty()) {
      const auto key = normalize_name(row.graph);
      if (std::none_of(opt.only.begin(), opt.only.end(),
                       [&](const std::string& s) { return normalize_name(s) == key; }))
        continue;
    }
    auto g = try_named_graph(row.graph);
    if (!g) {
      rep.skipped.push_back(row.graph);
      continue;
    }
    rep.rows.push_back({row, std::nullopt, false, {}});
    graphs.push_back(std::move(g));
  }

  SuiteOptions sopt = opt.suite;
  sopt.compute_exact = true;
  parallel_for(rep.rows.size(), opt.threads, [&](std::size_t i) {
    auto& r = rep.rows[i];
    try {
      GraphAnalysis a(*graphs[i], sopt.tol);
      r.suite = t == 0 ? eq_suite(a, sopt) : suite(a, t, sopt);
      r.suite->graph = r.golden.graph;
      if (r.suite->exact)
        for (const auto& [k, b] : r.suite->bounds)
          if (k != "degree" && b.applicable() && *b.value == r.suite->exact->value) r.bold = true;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });

  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    if (!r.suite) {
      rep.diffs.push_back({r.golden.graph, "error", "", r.error, "other"});
      continue;
    }
    for (std::size_t c = 0; c < golden.columns.size(); ++c) {
      const auto& col = golden.columns[c];
      std::string actual;
      const BoundResult* b = nullptr;
      if (col == "exact") {
        actual = r.suite->exact ? std::to_string(r.suite->exact->value) : "budget";
      } else if ((b = r.suite->find(col))) {
        actual = cell_text(*b);
      } else {
        actual = "?";
      }
      if (actual == r.golden.cells[c]) continue;
      CellDiff d{r.golden.graph, col, r.golden.cells[c], actual, ""};
      d.kind = classify(d, b, *graphs[i], t);
      rep.diffs.push_back(std::move(d));
    }
    if (r.bold != r.golden.bold)
      rep.diffs.push_back({r.golden.graph, "bold", r.golden.bold ? "1" : "0", r.bold ? "1" : "0", "bold"});
  }
  return rep;
}

void render_table_report(const TableReport& rep, Format fmt, std::ostream& out) {
  std::vector<std::string> cols;
  for (const auto& r : rep.rows)
    if (r.suite) {
      for (const auto& [k, _] : r.suite->bounds) cols.push_back(k);
      break;
    }
  cols.push_back("exact");

  auto cells_of = [&](const TableRowResult& r) {
    std::vector<std::string> cells;
    for (const auto& c : cols) {
      if (c == "exact") cells.push_back(r.suite && r.suite->exact ? std::to_string(r.suite->exact->value) : "budget");
      else if (const auto* b = r.suite ? r.suite->find(c) : nullptr) cells.push_back(cell_text(*b));
      else cells.push_back("?");
    }
    return cells;
  };

  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["table"] = to_string(rep.id);
    j["columns"] = cols;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows)
      j["rows"].push_back({{"graph", r.golden.graph}, {"bold", r.bold}, {"cells", cells_of(r)}});
    j["diffs"] = nlohmann::ordered_json::array();
    for (const auto& d : rep.diffs)
      j["diffs"].push_back({{"graph", d.graph}, {"column", d.column}, {"expected", d.expected},
                            {"actual", d.actual}, {"kind", d.kind}});
    j["skipped"] = rep.skipped;
    out << j.dump(2) << '\n';
    return;
  }
  if (fmt == Format::csv) {
    out << "graph,bold";
    for (const auto& c : cols) out << ',' << c;
    out << '\n';
    for (const auto& r : rep.rows) {
      out << '"' << r.golden.graph << "\"," << (r.bold ? 1 : 0);
      for (const auto& c : cells_of(r)) out << ',' << c;
      out << '\n';
    }
    return;
  }
  std::size_t w = 5;
  for (const auto& r : rep.rows) w = std::max(w, r.golden.graph.size() + 2);
  out << std::left << std::setw(static_cast<int>(w)) << "graph";
  for (const auto& c : cols) out << std::right << std::setw(10) << c;
  out << '\n';
  for (const auto& r : rep.rows) {
    out << std::left << std::setw(static_cast<int>(w)) << (r.golden.graph + (r.bold ? " *" : ""));
    for (const auto& c : cells_of(r)) out << std::right << std::setw(10) << c;
    out << '\n';
  }
  out << std::left << '\n'
      << rep.rows_matching() << " of " << rep.rows.size() << " rows match the bundled table";
  if (!rep.skipped.empty()) out << "; " << rep.skipped.size() << " rows skipped (no graph available)";
  out << '\n';
  if (!rep.diffs.empty()) {
    out << "\ndifferences (graph, column, expected, computed, kind):\n";
    for (const auto& d : rep.diffs)
      out << "  " << d.graph << ", " << d.column << ", " << d.expected << ", " << d.actual << ", " << d.kind << '\n';
  }
}

}  // namespace eqdist

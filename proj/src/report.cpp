#include "eqdist/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "eqdist/errors.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"

namespace eqdist {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string cell_text(const BoundResult& r) {
  if (!r.applicable()) return "-";
  if (r.saturated) return ">=" + std::to_string(*r.value);
  return std::to_string(*r.value);
}

std::vector<GraphInput> resolve_inputs(const RunConfig& cfg) {
  std::vector<GraphInput> out;
  for (const auto& name : cfg.names) {
    GraphInput in{name, std::nullopt, {}};
    try {
      in.graph = named_graph(name);
    } catch (const std::exception& e) {
      in.error = e.what();
    }
    out.push_back(std::move(in));
  }
  auto add_g6 = [&](const std::string& label, const std::string& text) {
    GraphInput in{label, std::nullopt, {}};
    try {
      in.graph = parse_graph6(text);
    } catch (const std::exception& e) {
      in.error = e.what();
    }
    out.push_back(std::move(in));
  };
  for (const auto& s : cfg.graph6) add_g6(s, s);
  for (const auto& file : cfg.g6_files) {
    std::ifstream f(file);
    if (!f) {
      out.push_back({file, std::nullopt, "cannot open " + file});
      continue;
    }
    std::size_t lineno = 0;
    for (std::string line; std::getline(f, line);) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      add_g6(file + ":" + std::to_string(lineno), line);
    }
  }
  return out;
}

std::vector<ReportRow> cmd_bounds(const RunConfig& cfg) {
  const auto inputs = resolve_inputs(cfg);
  std::vector<ReportRow> rows(inputs.size() * cfg.ts.size());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (std::size_t k = 0; k < cfg.ts.size(); ++k) {
      auto& r = rows[i * cfg.ts.size() + k];
      r.graph = inputs[i].name;
      r.t = cfg.ts[k];
      r.error = inputs[i].error;
    }
  SuiteOptions opt = cfg.suite;
  opt.compute_exact = cfg.exact;
  parallel_for(inputs.size(), cfg.threads, [&](std::size_t i) {
    if (!inputs[i].graph) return;
    const Graph& g = *inputs[i].graph;
    std::optional<GraphAnalysis> analysis;
    for (std::size_t k = 0; k < cfg.ts.size(); ++k) {
      auto& row = rows[i * cfg.ts.size() + k];
      row.n = g.order();
      const auto start = std::chrono::steady_clock::now();
      try {
        if (!analysis) analysis.emplace(g, cfg.suite.tol);
        row.suite = row.t == 0 ? eq_suite(*analysis, opt) : suite(*analysis, row.t, opt);
        row.suite->graph = row.graph;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  });
  return rows;
}

namespace {

std::vector<std::string> columns_for(const ReportRow& r) {
  if (!r.suite) return {};
  std::vector<std::string> cols;
  for (const auto& [k, _] : r.suite->bounds) cols.push_back(k);
  return cols;
}

std::string exact_text(const BoundSuite& s) {
  if (s.exact) return std::to_string(s.exact->value);
  if (!s.exact_error.empty()) return "budget";
  return "";
}

nlohmann::ordered_json bound_json(const BoundResult& r) {
  if (!r.applicable()) return {{"na", std::string(to_string(*r.na))}};
  if (r.saturated) return {{"at_least", *r.value}};
  return *r.value;
}

void render_json(const std::vector<ReportRow>& rows, const RunConfig& cfg, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph;
    j["n"] = r.n;
    if (r.t == 0) j["t"] = "eq";
    else j["t"] = r.t;
    if (!r.error.empty()) {
      j["error"] = r.error;
    } else if (r.suite) {
      nlohmann::ordered_json b = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.suite->bounds) b[k] = bound_json(v);
      j["bounds"] = b;
      if (r.suite->exact) {
        j["exact"] = r.suite->exact->value;
        j["witness"] = r.suite->exact->witness;
        if (r.t == 0) j["exact_t"] = r.suite->exact->t;
      } else if (!r.suite->exact_error.empty()) {
        j["exact"] = {{"error", r.suite->exact_error}};
      }
    }
    if (cfg.timing) j["seconds"] = r.seconds;
    doc.push_back(j);
  }
  out << doc.dump(2) << '\n';
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void render(const std::vector<ReportRow>& rows, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::json) return render_json(rows, cfg, out);

  // Rows of different t (eq vs eq_t) have different columns; emit a header
  // whenever the column set changes.
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> last;
  auto flush_table = [&] {
    if (table.empty()) return;
    std::vector<std::size_t> width(table[0].size(), 0);
    for (const auto& r : table)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : table) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) out << "  ";
        if (c == 0) out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
        else out << std::right << std::setw(static_cast<int>(c < width.size() ? width[c] : 0)) << r[c];
      }
      out << '\n';
    }
    out << std::left;
    table.clear();
  };
  for (const auto& r : rows) {
    auto cols = columns_for(r);
    std::vector<std::string> header{"graph", "n", "t"};
    header.insert(header.end(), cols.begin(), cols.end());
    header.push_back("exact");
    if (cfg.timing) header.push_back("seconds");
    if (r.error.empty() && header != last) {
      if (cfg.format == Format::table) {
        flush_table();
        if (!last.empty()) out << '\n';
        table.push_back(header);
      } else {
        for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
        out << '\n';
      }
      last = header;
    }
    std::vector<std::string> cells{r.graph, std::to_string(r.n), r.t == 0 ? "eq" : std::to_string(r.t)};
    if (!r.error.empty()) {
      cells.push_back("error: " + r.error);
    } else {
      for (const auto& [k, v] : r.suite->bounds) cells.push_back(cell_text(v));
      cells.push_back(exact_text(*r.suite));
      if (cfg.timing) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << r.seconds;
        cells.push_back(s.str());
      }
    }
    if (cfg.format == Format::table) {
      table.push_back(cells);
    } else {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_quote(cells[c]);
      out << '\n';
    }
  }
  flush_table();
}

}  // namespace eqdist

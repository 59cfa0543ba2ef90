#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "eqdist/suite.hpp"

namespace eqdist {

enum class Format { table, csv, json };

struct RunConfig {
  std::vector<std::string> names;    // --name
  std::vector<std::string> graph6;   // --g6
  std::vector<std::string> g6_files; // --g6-file
  std::vector<int> ts{2};            // t = 0 requests the eq row
  std::set<std::string> bounds;      // empty = all
  bool exact = false;
  Format format = Format::table;
  bool timing = false;               // timings break byte-identical output, so opt-in
  unsigned threads = 0;              // 0 = hardware concurrency
  SuiteOptions suite;
};

struct GraphInput {
  std::string name;
  std::optional<Graph> graph;
  std::string error;  // set when the input could not be resolved
};

struct ReportRow {
  std::string graph;
  std::size_t n = 0;
  int t = 0;
  std::optional<BoundSuite> suite;
  double seconds = 0.0;
  std::string error;  // hard error for this row (parse failure, disconnected, ...)
};

/// Inputs in command-line order: names, inline graph6, then file lines.
std::vector<GraphInput> resolve_inputs(const RunConfig& cfg);

/// One row per (graph, t). Rows are computed in parallel and returned in input order.
std::vector<ReportRow> cmd_bounds(const RunConfig& cfg);

void render(const std::vector<ReportRow>& rows, const RunConfig& cfg, std::ostream& out);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware concurrency).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// "-" for not applicable, ">=N" when saturated, otherwise the integer.
std::string cell_text(const BoundResult& r);

}  // namespace eqdist

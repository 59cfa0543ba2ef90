#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqdist/graph.hpp"

namespace eqdist {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct ExactOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  // eq(): stop scanning t once eq_t meets the distance-spectrum bound at t.
  bool range_reduction = true;
};

struct ExactResult {
  int value = 0;
  std::vector<Vertex> witness;  // sorted; size == value
  int t = 0;                    // distance parameter the value belongs to (eq: the maximizing t)
  std::uint64_t nodes = 0;      // branch-and-bound nodes spent
};

/// Maximum clique by bitset branch and bound with a greedy colouring bound.
/// Throws BudgetExceeded rather than returning an unproven size.
ExactResult max_clique(const Graph& g, const ExactOptions& opt = {});

/// Largest set with all pairwise distances exactly t. t > diam gives 1.
ExactResult eq_t(const Graph& g, int t, const ExactOptions& opt = {});
ExactResult eq_t(const DistanceMatrix& d, int t, const ExactOptions& opt = {});

/// Largest set with all pairwise distances > t.
ExactResult alpha_t(const Graph& g, int t, const ExactOptions& opt = {});
ExactResult alpha_t(const DistanceMatrix& d, int t, const ExactOptions& opt = {});

/// max over 1 <= t <= diam of eq_t; the smallest maximizing t is recorded.
ExactResult eq(const Graph& g, const ExactOptions& opt = {});

struct GapRow {
  std::string graph6;
  std::optional<int> alpha;  // alpha_{t-1}
  std::optional<int> eq;     // eq_t
  std::optional<int> gap;
  std::string error;         // non-empty when this graph failed
};

struct GapReport {
  int t = 0;
  std::vector<GapRow> rows;
  std::optional<int> max_gap;
};

/// alpha_{t-1} - eq_t per graph; failures are recorded and the stream continues.
GapReport gap_report(std::span<const Graph> graphs, int t, const ExactOptions& opt = {});
/// One graph6 string per line; blank lines are skipped.
GapReport gap_report(std::istream& graph6_lines, int t, const ExactOptions& opt = {});

}  // namespace eqdist

#pragma once

#include <cstddef>

#include "eqdist/bounds.hpp"
#include "eqdist/polynomial.hpp"

namespace eqdist {

struct PolyOptions {
  double eps = 1e-6;
  // Solve once per distinct walk signature (diag(A^i), i <= t-1) instead of
  // once per vertex. Vertices with equal signatures give identical programs.
  bool walk_regular_shortcut = true;
  // Refuse to enumerate 2^(d+1) patterns beyond this many distinct eigenvalues.
  std::size_t max_distinct = 22;
};

struct OptimizedBound {
  Polynomial p;
  BoundResult bound;
  Vertex base = 0;      // vertex whose program produced the optimum
  int pattern_or_l = 0; // inertial: winning sign pattern index; ratio: the l index
  bool upper_branch = false;  // inertial: optimum came from the count against W(p)
  std::size_t lps_solved = 0;
};

/// Best inertial-type bound on eq_t over p of degree <= t - 1 (t >= 2).
OptimizedBound optimize_inertial(const GraphAnalysis& a, int t, const PolyOptions& opt = {});
/// Best ratio-type bound on eq_t over p of degree <= t - 1 (t >= 2, regular graphs).
OptimizedBound optimize_ratio(const GraphAnalysis& a, int t, const PolyOptions& opt = {});

OptimizedBound optimize_inertial(const Graph& g, int t, const PolyOptions& opt = {});
OptimizedBound optimize_ratio(const Graph& g, int t, const PolyOptions& opt = {});

}  // namespace eqdist

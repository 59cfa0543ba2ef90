#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqdist/exact.hpp"
#include "eqdist/graph.hpp"

namespace eqdist {

struct SplitResult {
  bool split = false;
  std::vector<Vertex> clique;       // filled only when split
  std::vector<Vertex> independent;  // filled only when split
};

/// Hammer-Simeone degree-sequence test; the partition puts the m highest-degree
/// vertices (ties by index) in the clique, m = max{k : d_k >= k - 1}.
SplitResult is_split(const Graph& g);

enum class GadgetKind { odd_subdivision, even_subdivision, join_complete };
std::string_view to_string(GadgetKind k);

struct GadgetOutput {
  Graph h;
  std::vector<Vertex> original;  // original[v] is v's image in h
  GadgetKind kind = GadgetKind::odd_subdivision;
  std::vector<Vertex> centers;   // even gadget: central path vertex per edge
};

// Subdivision gadgets: edge (u, v), u < v, in lexicographic order, gets t-1 new
// vertices appended in order from u's side. Original vertices keep labels 0..n-1.

/// Every edge becomes a path of length t (t odd; t = 1 returns g unchanged).
/// Split inputs are accepted: the odd-case identity does not need non-splitness.
GadgetOutput gadget_odd(const Graph& g, int t);
/// Subdivision plus a clique on the path centres (t even). Rejects split graphs.
GadgetOutput gadget_even(const Graph& g, int t);
/// g joined with K_n, n = g.order(); K_n takes labels n..2n-1.
GadgetOutput gadget_join(const Graph& g);

enum class Verdict { verified, violated, inconclusive, rejected };
std::string_view to_string(Verdict v);

struct ReductionReport {
  std::string graph6;
  int t = 0;  // 0 = join gadget, checked against eq
  std::optional<int> lhs;  // eq_t(h), or eq(h) for the join
  std::optional<int> rhs;  // omega(g) (+1 for even t, +n for the join)
  Verdict verdict = Verdict::inconclusive;
  std::vector<Vertex> lhs_witness, rhs_witness;
  int eq_argmax_t = 0;  // join only: the distance attaining eq(h)
  std::string note;

  std::string to_json_line() const;
};

ReductionReport verify_reduction(const Graph& g, int t, const ExactOptions& opt = {});

}  // namespace eqdist

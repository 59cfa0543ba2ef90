#include "eqdist/reductions.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "eqdist/errors.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"

namespace eqdist {

SplitResult is_split(const Graph& g) {
  const auto n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (g.degree(order[k - 1]) + 1 >= k) m = k;
  long long head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += static_cast<long long>(g.degree(order[i]));
  SplitResult r;
  r.split = head == static_cast<long long>(m * (m - 1)) + tail;
  if (r.split) {
    r.clique.assign(order.begin(), order.begin() + m);
    r.independent.assign(order.begin() + m, order.end());
    std::sort(r.clique.begin(), r.clique.end());
    std::sort(r.independent.begin(), r.independent.end());
  }
  return r;
}

std::string_view to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::odd_subdivision: return "odd-subdivision";
    case GadgetKind::even_subdivision: return "even-subdivision-with-central-clique";
    case GadgetKind::join_complete: return "join-with-complete";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::rejected: return "rejected";
  }
  return "unknown";
}

namespace {

GadgetOutput subdivide(const Graph& g, int t, GadgetKind kind) {
  const auto n = g.order();
  const auto edges = g.edges();
  GadgetOutput out;
  out.kind = kind;
  out.h = Graph(n + (t - 1) * edges.size());
  out.original.resize(n);
  std::iota(out.original.begin(), out.original.end(), Vertex{0});
  auto next = static_cast<Vertex>(n);
  for (auto [u, v] : edges) {
    Vertex prev = u;
    for (int k = 1; k < t; ++k) {
      out.h.add_edge(prev, next);
      if (kind == GadgetKind::even_subdivision && k == t / 2) out.centers.push_back(next);
      prev = next++;
    }
    out.h.add_edge(prev, v);
  }
  for (std::size_t i = 0; i < out.centers.size(); ++i)
    for (std::size_t j = i + 1; j < out.centers.size(); ++j) out.h.add_edge(out.centers[i], out.centers[j]);
  return out;
}

}  // namespace

GadgetOutput gadget_odd(const Graph& g, int t) {
  if (t < 1 || t % 2 == 0) throw DomainError("odd gadget needs odd t >= 1");
  if (!is_connected(g)) throw DisconnectedGraph();
  return subdivide(g, t, GadgetKind::odd_subdivision);
}

GadgetOutput gadget_even(const Graph& g, int t) {
  if (t < 2 || t % 2 != 0) throw DomainError("even gadget needs even t >= 2");
  if (!is_connected(g)) throw DisconnectedGraph();
  if (is_split(g).split)
    throw DomainError("even gadget needs a non-split graph; use is_split to answer split inputs directly");
  return subdivide(g, t, GadgetKind::even_subdivision);
}

GadgetOutput gadget_join(const Graph& g) {
  GadgetOutput out;
  out.kind = GadgetKind::join_complete;
  if (g.order() == 0) throw DomainError("join gadget needs a non-empty graph");
  out.h = join(g, complete_graph(g.order()));
  out.original.resize(g.order());
  std::iota(out.original.begin(), out.original.end(), Vertex{0});
  return out;
}

std::string ReductionReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["graph6"] = graph6;
  j["t"] = t;
  j["lhs"] = lhs ? nlohmann::ordered_json(*lhs) : nlohmann::ordered_json(nullptr);
  j["rhs"] = rhs ? nlohmann::ordered_json(*rhs) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(verdict);
  j["lhs_witness"] = lhs_witness;
  j["rhs_witness"] = rhs_witness;
  if (t == 0) j["eq_argmax_t"] = eq_argmax_t;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

ReductionReport verify_reduction(const Graph& g, int t, const ExactOptions& opt) {
  ReductionReport rep;
  rep.graph6 = encode_graph6(g);
  rep.t = t;
  try {
    if (t < 0) throw DomainError("t must be >= 0 (0 selects the join gadget)");
    if (!is_connected(g)) throw DisconnectedGraph();
    const auto omega = max_clique(g, opt);
    rep.rhs_witness = omega.witness;
    if (t == 0) {
      const auto gad = gadget_join(g);
      const auto e = eq(gad.h, opt);
      rep.lhs = e.value;
      rep.lhs_witness = e.witness;
      rep.eq_argmax_t = e.t;
      rep.rhs = omega.value + static_cast<int>(g.order());
    } else {
      const auto gad = t % 2 ? gadget_odd(g, t) : gadget_even(g, t);
      const auto e = eq_t(gad.h, t, opt);
      rep.lhs = e.value;
      rep.lhs_witness = e.witness;
      rep.rhs = omega.value + (t % 2 ? 0 : 1);
    }
    rep.verdict = *rep.lhs == *rep.rhs ? Verdict::verified : Verdict::violated;
  } catch (const BudgetExceeded& e) {
    rep.verdict = Verdict::inconclusive;
    rep.note = e.what();
  } catch (const std::exception& e) {
    rep.verdict = Verdict::rejected;
    rep.note = e.what();
  }
  return rep;
}

}  // namespace eqdist

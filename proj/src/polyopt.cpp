#include "eqdist/polyopt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "eqdist/errors.hpp"
#include "eqdist/lp.hpp"

namespace eqdist {

namespace {

using Signature = std::vector<double>;

// One representative vertex per distinct signature, in vertex order, plus
// the list of distinct signatures (used as constraint rows).
struct Signatures {
  std::vector<Vertex> bases;
  std::vector<Signature> rows;
  std::vector<std::size_t> of;  // vertex -> index into rows
};

Signatures signatures(const GraphAnalysis& a, int deg, bool shortcut) {
  const auto w = a.walks(deg);
  Signatures s;
  std::map<Signature, std::size_t> index;
  s.of.resize(a.order());
  for (Vertex v = 0; v < a.order(); ++v) {
    Signature sig(deg + 1);
    for (int i = 0; i <= deg; ++i) sig[i] = w[i][v];
    auto [it, fresh] = index.emplace(sig, s.rows.size());
    if (fresh) s.rows.push_back(sig);
    s.of[v] = it->second;
    if (fresh || !shortcut) s.bases.push_back(v);
  }
  return s;
}

std::vector<double> powers(double x, int lo, int hi) {
  std::vector<double> out;
  for (int i = lo; i <= hi; ++i) out.push_back(std::pow(x, i));
  return out;
}

}  // namespace

OptimizedBound optimize_inertial(const GraphAnalysis& a, int t, const PolyOptions& opt) {
  if (t < 2) throw DomainError("inertial optimisation needs t >= 2");
  const int deg = t - 1;
  const auto& eig = a.adjacency_distinct();
  const std::size_t k = eig.size();
  if (k > opt.max_distinct)
    throw DomainError("graph has " + std::to_string(k) + " distinct eigenvalues; enumeration cap is " +
                      std::to_string(opt.max_distinct));

  // Sign patterns b (bit j set = eigenvalue j may stay above the minimum
  // diagonal), ordered by m.b, then lexicographically on (b_0, ..., b_d).
  std::vector<std::uint32_t> patterns(std::size_t{1} << k);
  std::iota(patterns.begin(), patterns.end(), 0u);
  auto weight = [&](std::uint32_t b) {
    int s = 0;
    for (std::size_t j = 0; j < k; ++j)
      if ((b >> j) & 1) s += eig.mults[j];
    return s;
  };
  auto lex_key = [&](std::uint32_t b) {
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < k; ++j) r |= ((b >> j) & 1u) << (k - 1 - j);
    return r;
  };
  std::stable_sort(patterns.begin(), patterns.end(), [&](std::uint32_t x, std::uint32_t y) {
    const int wx = weight(x), wy = weight(y);
    return wx != wy ? wx < wy : lex_key(x) < lex_key(y);
  });

  const auto sig = signatures(a, deg, opt.walk_regular_shortcut);
  std::vector<std::vector<double>> eig_rows;
  for (double th : eig.thetas) eig_rows.push_back(powers(th, 0, deg));

  OptimizedBound best;
  best.p = Polynomial(std::vector<double>(deg + 1, 0.0));
  best.bound = BoundResult::from_count(static_cast<std::int64_t>(a.order()));
  std::int64_t best_count = static_cast<std::int64_t>(a.order());

  // Branch 0 pins u as the minimum diagonal and pushes excluded eigenvalues
  // below it; branch 1 pins u as the maximum and pushes them above.
  for (int branch = 0; branch < 2; ++branch) {
    const bool lower = branch == 0;
    for (Vertex u : sig.bases) {
      for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        const auto b = patterns[pi];
        const int wb = weight(b);
        if (wb >= best_count) break;
        // The system is positively homogeneous in p, so a unit margin is
        // equivalent to any eps > 0; the solution is rescaled to eps below.
        LPProblem lp;
        lp.num_vars = deg + 1;
        for (std::size_t r = 0; r < sig.rows.size(); ++r)
          if (r != sig.of[u]) lp.add(sig.rows[r], lower ? Relation::ge : Relation::le, 0.0);
        lp.add(sig.rows[sig.of[u]], Relation::eq, 0.0);
        for (std::size_t j = 0; j < k; ++j)
          if (!((b >> j) & 1))
            lp.add(eig_rows[j], lower ? Relation::le : Relation::ge, lower ? -1.0 : 1.0);
        const auto res = solve_lp(lp);
        ++best.lps_solved;
        if (res.status != LPStatus::optimal) continue;
        best_count = wb;
        std::vector<double> c = res.x;
        for (auto& x : c) x *= opt.eps;
        best.p = Polynomial(std::move(c));
        best.bound = BoundResult::from_count(wb);
        best.base = u;
        best.pattern_or_l = static_cast<int>(b);
        best.upper_branch = !lower;
        break;
      }
    }
  }
  return best;
}

OptimizedBound optimize_ratio(const GraphAnalysis& a, int t, const PolyOptions& opt) {
  if (t < 2) throw DomainError("ratio optimisation needs t >= 2");
  OptimizedBound best;
  if (!a.regular()) {
    best.bound = BoundResult::not_applicable(NaReason::graph_not_regular);
    return best;
  }
  const int deg = t - 1;
  const auto& th = a.adjacency_distinct().thetas;
  const std::size_t d = th.size() - 1;
  const auto sig = signatures(a, deg, opt.walk_regular_shortcut);
  // a_0 cancels from every row and from the objective, so only a_1..a_deg are variables.
  auto tail = [&](const Signature& s) { return std::vector<double>(s.begin() + 1, s.end()); };
  const auto p0 = powers(th[0], 1, deg);

  double best_raw = INFINITY;
  std::vector<double> best_x;
  for (Vertex u : sig.bases) {
    const auto su = tail(sig.rows[sig.of[u]]);
    for (std::size_t l = 1; l <= d; ++l) {
      const auto pl = powers(th[l], 1, deg);
      LPProblem lp;
      lp.num_vars = deg;
      lp.objective.resize(deg);
      for (int i = 0; i < deg; ++i) lp.objective[i] = p0[i] - pl[i];
      for (std::size_t r = 0; r < sig.rows.size(); ++r) {
        if (r == sig.of[u]) continue;
        auto row = tail(sig.rows[r]);
        for (int i = 0; i < deg; ++i) row[i] -= su[i];
        lp.add(std::move(row), Relation::le, 0.0);
      }
      std::vector<double> norm(deg);
      for (int i = 0; i < deg; ++i) norm[i] = su[i] - pl[i];
      lp.add(std::move(norm), Relation::eq, 1.0);
      for (std::size_t j = 1; j <= d; ++j) {
        const auto pj = powers(th[j], 1, deg);
        std::vector<double> dom(deg), low(deg);
        for (int i = 0; i < deg; ++i) {
          dom[i] = p0[i] - pj[i];
          low[i] = pj[i] - pl[i];
        }
        lp.add(std::move(dom), Relation::ge, opt.eps);
        if (j != l) lp.add(std::move(low), Relation::ge, 0.0);
      }
      const auto res = solve_lp(lp);
      ++best.lps_solved;
      if (res.status != LPStatus::optimal || !(res.objective > 0)) continue;
      const double cand = static_cast<double>(a.order()) / res.objective;
      if (cand < best_raw) {
        best_raw = cand;
        best_x = res.x;
        best.base = u;
        best.pattern_or_l = static_cast<int>(l);
      }
    }
  }
  if (best_x.empty()) {
    best.bound = BoundResult::not_applicable(NaReason::degenerate_denominator);
    return best;
  }
  std::vector<double> c{0.0};
  c.insert(c.end(), best_x.begin(), best_x.end());
  best.p = Polynomial(std::move(c));
  best.bound = BoundResult::from_raw(best_raw);
  return best;
}

OptimizedBound optimize_inertial(const Graph& g, int t, const PolyOptions& opt) {
  return optimize_inertial(GraphAnalysis(g), t, opt);
}

OptimizedBound optimize_ratio(const Graph& g, int t, const PolyOptions& opt) {
  return optimize_ratio(GraphAnalysis(g), t, opt);
}

}  // namespace eqdist

#include "eqdist/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "eqdist/errors.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/spectra.hpp"

namespace eqdist {

namespace {

using Word = std::uint64_t;

// Vertices are relabelled by non-increasing degree so that the colouring
// sweeps see high-degree vertices first.
class CliqueSolver {
 public:
  CliqueSolver(const Graph& g, std::uint64_t budget) : n_(g.order()), w_((n_ + 63) / 64), budget_(budget) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    adj_.assign(n_ * w_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) set(row(i), j);
  }

  ExactResult run() {
    ExactResult res;
    if (n_ == 0) return res;
    greedy_seed();
    std::vector<Word> p(w_, 0);
    for (std::size_t v = 0; v < n_; ++v) set(p.data(), v);
    std::vector<std::size_t> current;
    expand(current, p);
    res.value = static_cast<int>(best_.size());
    for (auto v : best_) res.witness.push_back(order_[v]);
    std::sort(res.witness.begin(), res.witness.end());
    res.nodes = nodes_;
    return res;
  }

 private:
  static void set(Word* r, std::size_t v) { r[v >> 6] |= Word{1} << (v & 63); }
  static void clear(Word* r, std::size_t v) { r[v >> 6] &= ~(Word{1} << (v & 63)); }
  Word* row(std::size_t v) { return adj_.data() + v * w_; }
  const Word* row(std::size_t v) const { return adj_.data() + v * w_; }

  void greedy_seed() {
    // Start from each vertex and greedily extend; cheap and gives a decent floor.
    for (std::size_t s = 0; s < std::min<std::size_t>(n_, 64); ++s) {
      std::vector<std::size_t> c{s};
      std::vector<Word> cand(row(s), row(s) + w_);
      for (std::size_t v = 0; v < n_; ++v) {
        if ((cand[v >> 6] >> (v & 63)) & 1) {
          c.push_back(v);
          for (std::size_t k = 0; k < w_; ++k) cand[k] &= row(v)[k];
        }
      }
      if (c.size() > best_.size()) best_ = c;
    }
  }

  // Greedy sequential colouring of p; fills verts/colors in ascending colour order.
  void colour(const std::vector<Word>& p, std::vector<std::size_t>& verts, std::vector<int>& colors) const {
    std::vector<Word> uncoloured = p;
    std::vector<Word> q(w_);
    int k = 0;
    auto any = [&](const std::vector<Word>& x) {
      return std::any_of(x.begin(), x.end(), [](Word w) { return w != 0; });
    };
    while (any(uncoloured)) {
      ++k;
      q = uncoloured;
      for (std::size_t wi = 0; wi < w_; ++wi) {
        while (q[wi]) {
          const std::size_t v = wi * 64 + std::countr_zero(q[wi]);
          uncoloured[wi] &= ~(Word{1} << (v & 63));
          q[wi] &= ~(Word{1} << (v & 63));
          const Word* r = row(v);
          for (std::size_t j = wi; j < w_; ++j) q[j] &= ~r[j];
          verts.push_back(v);
          colors.push_back(k);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& current, std::vector<Word>& p) {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
    std::vector<std::size_t> verts;
    std::vector<int> colors;
    verts.reserve(n_);
    colors.reserve(n_);
    colour(p, verts, colors);
    std::vector<Word> np(w_);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      const auto v = verts[i];
      current.push_back(v);
      bool empty = true;
      const Word* r = row(v);
      for (std::size_t k = 0; k < w_; ++k) {
        np[k] = p[k] & r[k];
        empty = empty && np[k] == 0;
      }
      if (empty) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        std::vector<Word> child = np;
        expand(current, child);
      }
      current.pop_back();
      clear(p.data(), v);
    }
  }

  std::size_t n_, w_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Word> adj_;
  std::vector<std::size_t> best_;
};

Graph relation_graph(const DistanceMatrix& d, auto pred) {
  const auto n = d.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (pred(d.at(u, v))) h.add_edge(u, v);
  return h;
}

// |{distance eigenvalues <= -t}| + 1, the bound used to cut eq()'s scan short.
int distance_count_bound(const Spectrum& s, int t) {
  constexpr double kSlack = 1e-7;
  int c = 0;
  for (double x : s.values)
    if (x <= -t + kSlack) ++c;
  return c + 1;
}

}  // namespace

ExactResult max_clique(const Graph& g, const ExactOptions& opt) {
  return CliqueSolver(g, opt.budget).run();
}

ExactResult eq_t(const DistanceMatrix& d, int t, const ExactOptions& opt) {
  if (t < 1) throw DomainError("eq_t needs t >= 1");
  ExactResult r;
  if (t > d.diameter()) {
    r.value = 1;
    r.witness = {0};
  } else {
    r = max_clique(relation_graph(d, [t](int x) { return x == t; }), opt);
  }
  r.t = t;
  return r;
}

ExactResult eq_t(const Graph& g, int t, const ExactOptions& opt) {
  return eq_t(all_pairs_distances(g), t, opt);
}

ExactResult alpha_t(const DistanceMatrix& d, int t, const ExactOptions& opt) {
  if (t < 0) throw DomainError("alpha_t needs t >= 0");
  ExactResult r = max_clique(relation_graph(d, [t](int x) { return x > t; }), opt);
  r.t = t;
  return r;
}

ExactResult alpha_t(const Graph& g, int t, const ExactOptions& opt) {
  return alpha_t(all_pairs_distances(g), t, opt);
}

ExactResult eq(const Graph& g, const ExactOptions& opt) {
  const auto d = all_pairs_distances(g);
  if (g.order() == 1) return ExactResult{1, {0}, 1, 0};
  Spectrum ds;
  if (opt.range_reduction) ds = eigenvalues(distance_matrix(d));
  ExactResult best;
  std::uint64_t nodes = 0;
  for (int t = 1; t <= d.diameter(); ++t) {
    auto r = eq_t(d, t, opt);
    nodes += r.nodes;
    if (r.value > best.value) best = r;
    if (opt.range_reduction && r.value == distance_count_bound(ds, t)) break;
  }
  best.nodes = nodes;
  return best;
}

GapReport gap_report(std::span<const Graph> graphs, int t, const ExactOptions& opt) {
  if (t < 2) throw DomainError("gap report needs t >= 2");
  GapReport rep;
  rep.t = t;
  for (const auto& g : graphs) {
    GapRow row;
    row.graph6 = encode_graph6(g);
    try {
      const auto d = all_pairs_distances(g);
      row.alpha = alpha_t(d, t - 1, opt).value;
      row.eq = eq_t(d, t, opt).value;
      row.gap = *row.alpha - *row.eq;
      rep.max_gap = std::max(rep.max_gap.value_or(*row.gap), *row.gap);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

GapReport gap_report(std::istream& graph6_lines, int t, const ExactOptions& opt) {
  if (t < 2) throw DomainError("gap report needs t >= 2");
  GapReport rep;
  rep.t = t;
  for (std::string line; std::getline(graph6_lines, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    GapRow row;
    try {
      const Graph g = parse_graph6(line);
      auto sub = gap_report(std::span<const Graph>(&g, 1), t, opt);
      row = std::move(sub.rows.front());
      if (row.gap) rep.max_gap = std::max(rep.max_gap.value_or(*row.gap), *row.gap);
    } catch (const std::exception& e) {
      row.graph6 = line;
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace eqdist

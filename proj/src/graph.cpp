#include "eqdist/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "eqdist/errors.hpp"

namespace eqdist {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_)
    throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) return;
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t m = 0;
  for (Vertex v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

std::size_t Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  std::size_t m = n_;
  for (Vertex v = 0; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t s = 0;
  for (auto w : bits_) s += std::popcount(w);
  return s / 2;
}

bool Graph::is_regular() const noexcept {
  if (n_ == 0) return true;
  const auto d0 = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != d0) return false;
  return true;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    auto bits = r[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool DistanceMatrix::transmission_regular() const noexcept {
  return std::adjacent_find(transmission_.begin(), transmission_.end(),
                            std::not_equal_to<>()) == transmission_.end();
}

namespace {

// BFS distances from s; -1 for unreachable.
void bfs(const Graph& g, Vertex s, int* dist) {
  const auto n = g.order();
  std::fill(dist, dist + n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> dist(g.order());
  bfs(g, 0, dist.data());
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.assign(n * n, 0);
  dm.transmission_.assign(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    int* row = dm.d_.data() + s * n;
    bfs(g, s, row);
    for (std::size_t v = 0; v < n; ++v) {
      if (row[v] < 0) throw DisconnectedGraph();
      dm.transmission_[s] += row[v];
      dm.diam_ = std::max(dm.diam_, row[v]);
    }
  }
  return dm;
}

Graph exact_distance_power(const DistanceMatrix& d, int t) {
  if (t < 1) throw DomainError("exact distance power needs t >= 1");
  const auto n = d.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d.at(u, v) == t) h.add_edge(u, v);
  return h;
}

Graph exact_distance_power(const Graph& g, int t) {
  return exact_distance_power(all_pairs_distances(g), t);
}

Graph power(const DistanceMatrix& d, int t) {
  if (t < 1) throw DomainError("graph power needs t >= 1");
  const auto n = d.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d.at(u, v) <= t) h.add_edge(u, v);
  return h;
}

Graph power(const Graph& g, int t) { return power(all_pairs_distances(g), t); }

Graph complement(const Graph& g) {
  const auto n = g.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto off = static_cast<Vertex>(g.order());
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const auto off = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, v + off);
  return out;
}

Graph chained_copies(const Graph& g, int m, int t) {
  if (m < 1) throw DomainError("chained_copies needs m >= 1");
  if (t < 1) throw DomainError("chained_copies needs t >= 1");
  if (g.order() == 0) throw DomainError("chained_copies needs a non-empty graph");
  const auto n = g.order();
  const std::size_t total = m * (n + t) - t;
  Graph out(total);
  for (int i = 0; i < m; ++i) {
    const auto off = static_cast<Vertex>(i * n);
    for (auto [u, v] : g.edges()) out.add_edge(u + off, v + off);
  }
  auto next = static_cast<Vertex>(m * n);
  for (int i = 0; i + 1 < m; ++i) {
    Vertex prev = static_cast<Vertex>(i * n);
    for (int k = 0; k < t; ++k) {
      out.add_edge(prev, next);
      prev = next++;
    }
    out.add_edge(prev, static_cast<Vertex>((i + 1) * n));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

}  // namespace eqdist

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace eqdist {

using Vertex = std::uint32_t;

/// Undirected simple graph on the dense vertex range [0, n).
///
/// Adjacency is stored as one bit row per vertex, which is what the clique
/// solver and the transforms iterate over. Graphs are built with add_edge()
/// and treated as read-only afterwards.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Adds uv. Duplicate edges are ignored; loops and out-of-range vertices throw DomainError.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const noexcept;
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  std::size_t edge_count() const noexcept;
  bool is_regular() const noexcept;

  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// All-pairs shortest-path distances of a connected graph.
class DistanceMatrix {
 public:
  std::size_t order() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }
  int diameter() const noexcept { return diam_; }
  long long transmission(Vertex v) const noexcept { return transmission_[v]; }
  const std::vector<long long>& transmissions() const noexcept { return transmission_; }
  /// True when every row of D has the same sum.
  bool transmission_regular() const noexcept;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);
  std::size_t n_ = 0;
  std::vector<int> d_;
  int diam_ = 0;
  std::vector<long long> transmission_;
};

bool is_connected(const Graph& g);

/// BFS from every vertex. Throws DisconnectedGraph.
DistanceMatrix all_pairs_distances(const Graph& g);

/// uv is an edge iff d(u, v) == t. t > diam yields the edgeless graph.
Graph exact_distance_power(const Graph& g, int t);
Graph exact_distance_power(const DistanceMatrix& d, int t);

/// uv is an edge iff 1 <= d(u, v) <= t.
Graph power(const Graph& g, int t);
Graph power(const DistanceMatrix& d, int t);

Graph complement(const Graph& g);

/// Disjoint union with vertices of h shifted by g.order(), plus every cross edge.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// m copies of g in a line. Consecutive anchors (vertex 0 of each copy) are
/// linked through t fresh vertices, so each link contributes t vertices and
/// the total order is m * (g.order() + t) - t. Copy i occupies
/// [i * g.order(), (i + 1) * g.order()); link vertices follow all copies.
Graph chained_copies(const Graph& g, int m, int t);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace eqdist

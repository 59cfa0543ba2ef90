#include "eqdist/random.hpp"

#include <algorithm>
#include <numeric>

namespace eqdist {

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  if (n <= 1) return g;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution extra(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && extra(rng)) g.add_edge(u, v);
  return g;
}

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

}  // namespace eqdist

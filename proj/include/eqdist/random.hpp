#pragma once

#include <cstdint>
#include <random>

#include "eqdist/graph.hpp"
#include "eqdist/spectra.hpp"

namespace eqdist {

/// Connected random graph: a random recursive tree on a shuffled vertex order,
/// then every remaining pair becomes an edge with probability p.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Symmetric matrix with iid uniform(-1, 1) entries on and above the diagonal.
SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng);

}  // namespace eqdist

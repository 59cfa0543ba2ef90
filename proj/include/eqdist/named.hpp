#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqdist/graph.hpp"

namespace eqdist {

// Families. Labelings are fixed so golden values stay stable:
//   complete/cycle/path: 0..n-1 in order; star: center 0
//   extended_star(n, m): center 0, path i (0-based) is 1+i*m .. (i+1)*m from the center out
//   hypercube(d): binary counting, u ~ v iff they differ in one bit
//   johnson(n, k): k-subsets in colex order (increasing bitmask), A ~ B iff |A & B| = k-1
//   generalized_petersen(n, k): outer cycle 0..n-1, spokes i ~ n+i, inner i ~ i+k (mod n)
//   lcf(n, shifts, repeats): Hamiltonian cycle 0..n-1 plus the LCF chords
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph extended_star(std::size_t n, std::size_t m);
Graph hypercube(std::size_t d);
Graph johnson(std::size_t n, std::size_t k);
Graph generalized_petersen(std::size_t n, std::size_t k);
Graph lcf(std::size_t n, std::span<const int> shifts, std::size_t repeats);

Graph petersen();
Graph heawood();
Graph thomsen();
Graph hexahedron();
Graph octahedron();
Graph icosahedron();
Graph dodecahedron();
Graph desargues();
Graph pappus();
Graph moebius_kantor();
Graph nauru();
Graph coxeter();

/// Lowercase, drop a trailing " graph", map runs of non-alphanumerics to '_'.
/// "Moebius-Kantor Graph" -> "moebius_kantor".
std::string normalize_name(std::string_view name);

/// Bundled graph6 catalog: catalog.g6 plus a "name line" index file.
class Catalog {
 public:
  Catalog() = default;
  static Catalog load(const std::filesystem::path& dir);

  std::optional<Graph> find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, std::string> g6_;
};

std::filesystem::path default_data_dir();
/// Catalog under default_data_dir()/named, loaded once.
const Catalog& default_catalog();

/// Resolves family specs (k_5, c_6, p_4, s_5, q_3, j_7_3, es_6_2, gp_5_2,
/// kk_3_3), built-in names, then the bundled catalog. Throws DomainError.
Graph named_graph(std::string_view name);
std::optional<Graph> try_named_graph(std::string_view name);

/// Fixed (parameterless) built-in constructor names.
std::vector<std::string> builtin_names();

}  // namespace eqdist

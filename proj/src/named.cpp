#include "eqdist/named.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>

#include "eqdist/errors.hpp"
#include "eqdist/graph6.hpp"

#ifndef EQDIST_DATA_DIR
#define EQDIST_DATA_DIR "data"
#endif

namespace eqdist {

Graph complete_graph(std::size_t n) {
  if (n < 1) throw DomainError("K_n needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("C_n needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw DomainError("P_n needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(std::size_t n) {
  if (n < 1) throw DomainError("S_n needs n >= 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw DomainError("K_{a,b} needs a, b >= 1");
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

Graph extended_star(std::size_t n, std::size_t m) {
  if (n < 2 || m < 1) throw DomainError("ES(n,m) needs n >= 2 and m >= 1");
  Graph g((n - 1) * m + 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = static_cast<Vertex>(1 + i * m + j);
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

Graph hypercube(std::size_t d) {
  if (d < 1 || d > 16) throw DomainError("Q_d needs 1 <= d <= 16");
  const std::size_t n = std::size_t{1} << d;
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      const Vertex w = v ^ (Vertex{1} << b);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

namespace {

// k-subsets of [0, n) as bitmasks in increasing order, which is colex order.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  return out;
}

}  // namespace

Graph johnson(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n || n > 24) throw DomainError("J(n,k) needs 1 <= k < n <= 24");
  const auto vs = subsets(n, k);
  Graph g(vs.size());
  for (Vertex a = 0; a < vs.size(); ++a)
    for (Vertex b = a + 1; b < vs.size(); ++b)
      if (static_cast<std::size_t>(std::popcount(vs[a] & vs[b])) == k - 1) g.add_edge(a, b);
  return g;
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw DomainError("GP(n,k) needs n >= 3, 1 <= k < n/2");
  Graph g(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    g.add_edge(i, static_cast<Vertex>((i + 1) % n));
    g.add_edge(i, static_cast<Vertex>(n + i));
    g.add_edge(static_cast<Vertex>(n + i), static_cast<Vertex>(n + (i + k) % n));
  }
  return g;
}

Graph lcf(std::size_t n, std::span<const int> shifts, std::size_t repeats) {
  if (n < 3 || shifts.empty()) throw DomainError("LCF notation needs n >= 3 and shifts");
  Graph g = cycle_graph(n);
  const auto sn = static_cast<long>(n);
  for (std::size_t i = 0; i < shifts.size() * repeats && i < n; ++i) {
    const long w = ((static_cast<long>(i) + shifts[i % shifts.size()]) % sn + sn) % sn;
    if (w != static_cast<long>(i)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(w));
  }
  return g;
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph heawood() {
  constexpr std::array s{5, -5};
  return lcf(14, s, 7);
}

Graph thomsen() { return complete_bipartite(3, 3); }

Graph hexahedron() { return hypercube(3); }

Graph octahedron() {
  Graph g(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v != (u ^ 1u)) g.add_edge(u, v);
  return g;
}

// 0 = top pole, 1..5 upper ring, 6..10 lower ring, 11 = bottom pole.
Graph icosahedron() {
  Graph g(12);
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    g.add_edge(0, up);
    g.add_edge(11, lo);
    g.add_edge(up, up_next);
    g.add_edge(lo, lo_next);
    g.add_edge(up, lo);
    g.add_edge(up, lo_next);
  }
  return g;
}

Graph dodecahedron() { return generalized_petersen(10, 2); }
Graph desargues() { return generalized_petersen(10, 3); }

Graph pappus() {
  constexpr std::array s{5, 7, -7, 7, -7, -5};
  return lcf(18, s, 3);
}

Graph moebius_kantor() { return generalized_petersen(8, 3); }
Graph nauru() { return generalized_petersen(12, 5); }

// 3-subsets of a 7-set that are not lines of the Fano plane, adjacent when disjoint.
Graph coxeter() {
  constexpr std::array<std::uint32_t, 7> lines{0b0000111, 0b0011001, 0b1100001, 0b0101010,
                                               0b1010010, 0b1001100, 0b0110100};
  std::vector<std::uint32_t> vs;
  for (auto s : subsets(7, 3))
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) vs.push_back(s);
  Graph g(vs.size());
  for (Vertex a = 0; a < vs.size(); ++a)
    for (Vertex b = a + 1; b < vs.size(); ++b)
      if ((vs[a] & vs[b]) == 0) g.add_edge(a, b);
  return g;
}

namespace {

template <std::size_t N>
Graph lcf_of(std::size_t n, const std::array<int, N>& s, std::size_t repeats) {
  return lcf(n, s, repeats);
}

const std::map<std::string, std::function<Graph()>, std::less<>>& builtins() {
  static const std::map<std::string, std::function<Graph()>, std::less<>> table{
      {"petersen", petersen},
      {"heawood", heawood},
      {"thomsen", thomsen},
      {"hexahedron", hexahedron},
      {"octahedron", octahedron},
      {"icosahedron", icosahedron},
      {"dodecahedron", dodecahedron},
      {"desargues", desargues},
      {"pappus", pappus},
      {"moebius_kantor", moebius_kantor},
      {"nauru", nauru},
      {"coxeter", coxeter},
      {"durer", [] { return generalized_petersen(6, 2); }},
      {"wagner", [] { return lcf_of(8, std::array{4}, 8); }},
      {"franklin", [] { return lcf_of(12, std::array{5, -5}, 6); }},
      {"frucht", [] { return lcf_of(12, std::array{-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2}, 1); }},
      {"truncated_tetrahedron", [] { return lcf_of(12, std::array{2, 6, -2}, 4); }},
      {"bidiakis_cube", [] { return lcf_of(12, std::array{6, 4, -4}, 4); }},
      {"tutte_coxeter", [] { return lcf_of(30, std::array{-13, -9, 7, -7, 9, 13}, 5); }},
      {"dyck", [] { return lcf_of(32, std::array{5, -5, 13, -13}, 8); }},
      {"f26a", [] { return lcf_of(26, std::array{-7, 7}, 13); }},
      {"mcgee", [] { return lcf_of(24, std::array{12, 7, -7}, 8); }},
      {"foster", [] { return lcf_of(90, std::array{17, -9, 37, -37, 9, -17}, 15); }},
      {"gray", [] { return lcf_of(54, std::array{-25, 7, -7, 13, -13, 25}, 9); }},
      {"folkman", [] { return lcf_of(20, std::array{5, -7, -7, 5}, 5); }},
  };
  return table;
}

bool parse_params(std::string_view s, std::vector<std::size_t>& out) {
  out.clear();
  while (!s.empty()) {
    const auto cut = s.find('_');
    const auto tok = s.substr(0, cut);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty()) return false;
    out.push_back(v);
    if (cut == std::string_view::npos) break;
    s.remove_prefix(cut + 1);
  }
  return !out.empty();
}

std::optional<Graph> family(std::string_view name) {
  const auto cut = name.find('_');
  if (cut == std::string_view::npos) return std::nullopt;
  const auto head = name.substr(0, cut);
  std::vector<std::size_t> p;
  if (!parse_params(name.substr(cut + 1), p)) return std::nullopt;
  auto want = [&](std::size_t k) {
    if (p.size() != k) throw DomainError("family '" + std::string(head) + "' takes " +
                                         std::to_string(k) + " parameter(s)");
  };
  if (head == "k") return want(1), complete_graph(p[0]);
  if (head == "c") return want(1), cycle_graph(p[0]);
  if (head == "p") return want(1), path_graph(p[0]);
  if (head == "s") return want(1), star_graph(p[0]);
  if (head == "q") return want(1), hypercube(p[0]);
  if (head == "j") return want(2), johnson(p[0], p[1]);
  if (head == "es") return want(2), extended_star(p[0], p[1]);
  if (head == "gp") return want(2), generalized_petersen(p[0], p[1]);
  if (head == "kk") return want(2), complete_bipartite(p[0], p[1]);
  return std::nullopt;
}

}  // namespace

std::string normalize_name(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (std::string_view suffix : {" graph", "_graph"})
    if (s.size() > suffix.size() && s.ends_with(suffix)) s.resize(s.size() - suffix.size());
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(c);
    else if (!out.empty() && out.back() != '_')
      out.push_back('_');
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog cat;
  std::ifstream g6(dir / "catalog.g6");
  std::ifstream idx(dir / "index.txt");
  if (!g6 || !idx) return cat;
  std::vector<std::string> lines;
  for (std::string line; std::getline(g6, line);) lines.push_back(line);
  for (std::string line; std::getline(idx, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string name;
    std::size_t lineno = 0;
    if (!(in >> name >> lineno) || lineno < 1 || lineno > lines.size()) continue;
    cat.g6_[normalize_name(name)] = lines[lineno - 1];
  }
  return cat;
}

std::optional<Graph> Catalog::find(std::string_view name) const {
  auto it = g6_.find(normalize_name(name));
  if (it == g6_.end()) return std::nullopt;
  return parse_graph6(it->second);
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : g6_) out.push_back(k);
  return out;
}

std::filesystem::path default_data_dir() { return EQDIST_DATA_DIR; }

const Catalog& default_catalog() {
  static const Catalog cat = Catalog::load(default_data_dir() / "named");
  return cat;
}

std::optional<Graph> try_named_graph(std::string_view name) {
  const auto key = normalize_name(name);
  if (auto g = family(key)) return g;
  if (auto it = builtins().find(key); it != builtins().end()) return it->second();
  return default_catalog().find(key);
}

Graph named_graph(std::string_view name) {
  if (auto g = try_named_graph(name)) return std::move(*g);
  throw DomainError("unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, _] : builtins()) out.push_back(k);
  return out;
}

}  // namespace eqdist

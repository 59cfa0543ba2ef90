#include <doctest.h>

#include <random>
#include <sstream>

#include "eqdist/errors.hpp"
#include "eqdist/exact.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"
#include "eqdist/random.hpp"
#include "oracles.hpp"

using namespace eqdist;

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!g.adjacent(w[i], w[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("clique number") {
  CHECK(max_clique(complete_graph(5)).value == 5);
  CHECK(max_clique(petersen()).value == 2);
  const Graph j = join(cycle_graph(5), complete_graph(5));
  const auto r = max_clique(j);
  CHECK(r.value == 7);
  CHECK(is_clique(j, r.witness));
  CHECK(max_clique(Graph(0)).value == 0);
}

TEST_CASE("clique number agrees with exhaustive search") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g(2 + rng() % 15);
    const double p = 0.2 + 0.6 * double(rng() % 100) / 100.0;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (double(rng() % 1000) / 1000.0 < p) g.add_edge(u, v);
    const auto r = max_clique(g);
    CHECK(r.value == oracle::clique(g));
    CHECK(is_clique(g, r.witness));
    CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
  }
}

TEST_CASE("budget is enforced, never a wrong answer") {
  ExactOptions tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS(max_clique(complement(named_graph("coxeter")), tiny), BudgetExceeded);
  try {
    max_clique(complement(named_graph("coxeter")), tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 3);
  }
}

TEST_CASE("equidistant and distance-independent sets on named graphs") {
  const Graph p = petersen();
  CHECK(eq_t(p, 2).value == 4);
  CHECK(eq_t(heawood(), 2).value == 7);
  CHECK(eq_t(johnson(7, 3), 3).value == 2);
  CHECK(alpha_t(p, 1).value == 4);
  CHECK(alpha_t(p, 2).value == 1);
  CHECK(eq(p).value == 4);
  CHECK(eq(heawood()).value == 7);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(eq(complete_graph(n)).value == int(n));

  const auto r = eq_t(p, 5);  // beyond the diameter
  CHECK(r.value == 1);
  CHECK(r.witness == std::vector<Vertex>{0});
  CHECK_THROWS_AS(eq_t(p, 0), DomainError);
  CHECK_THROWS_AS(eq_t(Graph(3), 1), DisconnectedGraph);
}

TEST_CASE("exact solvers agree with exhaustive search") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 80; ++rep) {
    const Graph g = random_connected_graph(2 + rng() % 11, 0.05 + 0.4 * double(rng() % 100) / 100.0, rng);
    const auto f = oracle::floyd(g);
    const int diam = oracle::diameter(g);
    CAPTURE(encode_graph6(g));
    for (int t = 1; t <= diam + 1; ++t) {
      const auto e = eq_t(g, t);
      CHECK(e.value == oracle::eq_t(g, t));
      for (std::size_t i = 0; i < e.witness.size(); ++i)
        for (std::size_t j = i + 1; j < e.witness.size(); ++j) CHECK(f[e.witness[i]][e.witness[j]] == t);
      const auto a = alpha_t(g, t);
      CHECK(a.value == oracle::alpha_t(g, t));
      for (std::size_t i = 0; i < a.witness.size(); ++i)
        for (std::size_t j = i + 1; j < a.witness.size(); ++j) CHECK(f[a.witness[i]][a.witness[j]] > t);
    }
    const auto q = eq(g);
    CHECK(q.value == oracle::eq(g));
    CHECK(oracle::eq_t(g, q.t) == q.value);
    for (int t = 1; t < q.t; ++t) CHECK(oracle::eq_t(g, t) < q.value);  // smallest maximiser
  }
}

TEST_CASE("gap report") {
  // ES(6,2): five leaves pairwise at distance 4, nothing else that far apart
  const std::vector<Graph> one{extended_star(6, 2)};
  auto rep = gap_report(one, 4);
  REQUIRE(rep.rows.size() == 1);
  CHECK(*rep.rows[0].alpha == oracle::alpha_t(one[0], 3));
  CHECK(*rep.rows[0].eq == oracle::eq_t(one[0], 4));
  CHECK(*rep.rows[0].alpha == 5);
  CHECK(*rep.rows[0].eq == 5);
  CHECK(*rep.max_gap == 0);

  const std::vector<Graph> k5{complete_graph(5)};
  CHECK(*gap_report(k5, 2).rows[0].gap == 0);

  const Graph chain = chained_copies(extended_star(4, 2), 3, 4);
  const std::vector<Graph> c{chain};
  rep = gap_report(c, 4);
  CHECK(*rep.rows[0].alpha == oracle::alpha_t(chain, 3));
  CHECK(*rep.rows[0].eq == oracle::eq_t(chain, 4));

  std::istringstream in("A_\n\nnot-a-graph\nD?{\n");
  rep = gap_report(in, 2);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].error.empty());
  CHECK_FALSE(rep.rows[1].error.empty());
  CHECK(rep.rows[2].graph6 == "D?{");
  CHECK_THROWS_AS(gap_report(k5, 1), DomainError);
}

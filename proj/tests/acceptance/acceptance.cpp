// One PASS/FAIL line per acceptance criterion. `acceptance N` runs only N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "eqdist/bounds.hpp"
#include "eqdist/errors.hpp"
#include "eqdist/exact.hpp"
#include "eqdist/named.hpp"
#include "eqdist/polyopt.hpp"
#include "eqdist/random.hpp"
#include "eqdist/spectra.hpp"
#include "eqdist/table.hpp"
#include "eqdist/verify.hpp"

using namespace eqdist;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void summarise(Outcome& o, const std::vector<PropertyResult>& results, bool allow_inconclusive) {
  for (const auto& p : results) {
    o.detail << " " << p.name << ": " << p.cases << " cases, " << p.failed << " failed, " << p.inconclusive
             << " inconclusive;";
    o.require(p.cases > 0, p.name + ": no cases");
    o.require(p.failed == 0, p.name + ": " + (p.failures.empty() ? "" : p.failures.front()));
    if (!allow_inconclusive) o.require(p.inconclusive == 0, p.name + ": inconclusive cases");
  }
}

// Table reproduction for graphs with a built-in constructor.
Outcome table_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  std::set<std::string> builtin;
  for (const auto& n : builtin_names()) builtin.insert(n);

  std::set<std::string> graphs_all_match;
  std::map<std::string, int> graphs_seen;
  std::map<std::string, int> diff_by_column;
  for (auto id : {TableId::eq2, TableId::eq3, TableId::eq}) {
    TableOptions opt;
    for (const auto& row : load_golden(id, default_data_dir()).rows)
      if (builtin.count(normalize_name(row.graph))) opt.only.push_back(row.graph);
    const auto rep = cmd_table(id, opt);
    std::set<std::string> bad;
    for (const auto& d : rep.diffs) {
      if (d.kind == "bold") continue;
      bad.insert(d.graph);
      ++diff_by_column[std::string(to_string(id)) + "/" + d.column + "(" + d.kind + ")"];
    }
    std::size_t match = 0;
    for (const auto& r : rep.rows) {
      ++graphs_seen[r.golden.graph];
      if (!r.error.empty()) bad.insert(r.golden.graph);
      if (!bad.count(r.golden.graph)) ++match;
    }
    o.detail << " " << to_string(id) << ": " << match << "/" << rep.rows.size() << " rows match;";
    o.require(bad.empty(), std::string(to_string(id)) + ": " + std::to_string(bad.size()) + " rows differ");
  }
  o.require(graphs_seen.size() >= 15, "fewer than 15 constructor-backed graphs");
  o.detail << " graphs: " << graphs_seen.size() << ";";
  if (!diff_by_column.empty()) {
    o.detail << " differing cells:";
    for (const auto& [k, v] : diff_by_column) o.detail << " " << k << "=" << v;
    o.detail << ";";
  }
  const double s = seconds_since(t0);
  o.detail << " " << s << " s";
  o.require(s < 120, "slower than 2 minutes");
  return o;
}

Outcome johnson_tightness() {
  Outcome o;
  const auto t0 = Clock::now();
  summarise(o, verify_johnson({}), false);
  const double s = seconds_since(t0);
  o.detail << " " << s << " s";
  o.require(s < 60, "slower than 1 minute");
  return o;
}

Outcome reduction_identities() {
  Outcome o;
  VerifyOptions opt;
  opt.count = 50;
  opt.max_n = 7;
  summarise(o, verify_gadgets(opt), false);
  return o;
}

Outcome bound_soundness() {
  Outcome o;
  summarise(o, verify_soundness({}), true);
  return o;
}

Outcome distance_relations() {
  Outcome o;
  VerifyOptions opt;
  opt.count = 100;
  opt.max_n = 9;
  summarise(o, verify_relations(opt), false);
  return o;
}

Outcome gap_construction() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream broken;
  int checked = 0, held = 0;
  for (int t = 2; t <= 5; ++t)
    for (std::size_t n = 4; n <= 8; ++n) {
      const Graph g = extended_star(n, static_cast<std::size_t>((t + 1) / 2));
      const int a = alpha_t(g, t).value;
      ++checked;
      if (a == static_cast<int>(n) - 1) ++held;
      else broken << " ES(" << n << "," << (t + 1) / 2 << ") t=" << t << ": " << a;
    }
  o.detail << " alpha_t(ES(n,(t+1)/2)) = n-1 in " << held << "/" << checked << " cases;";
  o.require(held == checked, "alpha_t(ES) != n-1 for" + broken.str());

  std::vector<int> alpha3, eq4;
  const Graph es = extended_star(4, 2);
  for (int m = 1; m <= 3; ++m) {
    const Graph g = chained_copies(es, m, 4);
    alpha3.push_back(alpha_t(g, 3).value);
    eq4.push_back(eq_t(g, 4).value);
  }
  o.detail << " chained ES(4,2), t=4: alpha_3 =";
  for (int v : alpha3) o.detail << " " << v;
  o.detail << ", eq_4 =";
  for (int v : eq4) o.detail << " " << v << "";
  o.detail << ";";
  for (int m = 1; m < 3; ++m)
    o.require(alpha3[m] - alpha3[m - 1] == 3,
              "alpha_3 grows by " + std::to_string(alpha3[m] - alpha3[m - 1]) + " from m=" + std::to_string(m));
  for (int m = 1; m < 3; ++m)
    o.require(eq4[m] <= eq4[0], "eq_4 at m=" + std::to_string(m + 1) + " exceeds its m=1 value");
  const double s = seconds_since(t0);
  o.detail << " " << s << " s";
  o.require(s < 60, "slower than 1 minute");
  return o;
}

Outcome optimizer_consistency() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> corpus;
  for (const auto& n : builtin_names()) corpus.emplace_back(n, named_graph(n));
  for (const auto& n : default_catalog().names()) corpus.emplace_back(n, *default_catalog().find(n));
  for (std::size_t n = 6; n <= 9; ++n) corpus.emplace_back("j_" + std::to_string(n) + "_3", johnson(n, 3));
  for (std::size_t n = 8; n <= 10; ++n) corpus.emplace_back("j_" + std::to_string(n) + "_4", johnson(n, 4));
  for (std::size_t d = 3; d <= 5; ++d) corpus.emplace_back("q_" + std::to_string(d), hypercube(d));

  int compared = 0, agreed = 0;
  for (const auto& [name, g] : corpus) {
    if (!g.is_regular()) continue;
    GraphAnalysis a(g);
    for (int t : {3, 4}) {
      const auto closed = t == 3 ? ratio_bound_t3(a) : ratio_bound_t4(a);
      if (!closed.applicable()) continue;
      const auto opt = optimize_ratio(a, t);
      if (!opt.bound.applicable()) continue;
      ++compared;
      if (*opt.bound.value == *closed.value) ++agreed;
      else
        o.require(false, name + " t=" + std::to_string(t) + ": optimised " + std::to_string(*opt.bound.value) +
                             " vs closed form " + std::to_string(*closed.value));
    }
  }
  o.detail << " ratio optimum = closed form on " << agreed << "/" << compared << " (graph, t) pairs;";
  o.require(compared > 0, "no comparable graphs");

  const auto pet = optimize_inertial(petersen(), 2);
  o.detail << " inertial Petersen t=2: " << *pet.bound.value << ";";
  o.require(*pet.bound.value == 4, "Petersen inertial != 4");
  if (auto gr = try_named_graph("grotzsch")) {
    const auto r = optimize_inertial(*gr, 2);
    o.detail << " inertial Grotzsch t=2: " << *r.bound.value << ";";
    o.require(*r.bound.value == 5, "Grotzsch inertial != 5");
  } else {
    o.require(false, "Grotzsch graph not available");
  }
  return o;
}

Outcome numerics() {
  Outcome o;
  std::mt19937_64 rng(2024);
  double worst = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng() % 64;
    const auto m = random_symmetric(n, rng);
    const auto e = eigen_decompose(m);
    double err = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t k = 0; k < n; ++k) s += e.vectors(i, k) * e.spectrum[k] * e.vectors(j, k);
        err = std::max(err, std::abs(s - m(i, j)));
      }
    const double rel = err / (1 + m.frobenius());
    worst = std::max(worst, rel);
  }
  o.detail << " worst reconstruction error / (1 + |A|_F) = " << worst << ";";
  o.require(worst <= 1e-8, "reconstruction error too large");

  const Graph p = petersen();
  const auto adj = eigenvalues(adjacency_matrix(p));
  const auto dist = eigenvalues(distance_matrix(all_pairs_distances(p)));
  const std::vector<double> want_adj{3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
  const std::vector<double> want_dist{15, 0, 0, 0, 0, -3, -3, -3, -3, -3};
  double dev = 0;
  for (std::size_t i = 0; i < 10; ++i)
    dev = std::max({dev, std::abs(adj[i] - want_adj[i]), std::abs(dist[i] - want_dist[i])});
  o.detail << " Petersen spectra deviation " << dev << ";";
  o.require(dev <= 1e-8, "Petersen spectra off");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"table reproduction", table_reproduction},
      {"Johnson tightness", johnson_tightness},
      {"reduction identities", reduction_identities},
      {"bound soundness", bound_soundness},
      {"distance relations", distance_relations},
      {"gap construction", gap_construction},
      {"optimizer consistency", optimizer_consistency},
      {"numerics", numerics},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::cerr << "usage: acceptance [1-" << criteria().size() << "]\n";
      return 64;
    }
    which.push_back(k);
  } else {
    for (int k = 1; k <= static_cast<int>(criteria().size()); ++k) which.push_back(k);
  }
  bool all = true;
  for (int k : which) {
    const auto& [name, fn] = criteria()[k - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << "criterion " << k << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " -" << o.detail.str()
              << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

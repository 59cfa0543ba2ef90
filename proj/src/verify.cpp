#include "eqdist/verify.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eqdist/bounds.hpp"
#include "eqdist/errors.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"
#include "eqdist/random.hpp"
#include "eqdist/report.hpp"
#include "eqdist/suite.hpp"

namespace eqdist {

namespace {

PropertyResult property(std::string name) {
  PropertyResult p;
  p.name = std::move(name);
  return p;
}

}  // namespace

void PropertyResult::fail(std::string what) {
  ++failed;
  if (failures.size() < 10) failures.push_back(std::move(what));
}

std::vector<Graph> random_nonsplit_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  if (max_n < 4) throw DomainError("non-split graphs need at least 4 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(4, max_n);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  std::vector<Graph> out;
  while (out.size() < count) {
    Graph g = random_connected_graph(order(rng), density(rng), rng);
    if (!is_split(g).split) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> random_connected_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(2, std::max<std::size_t>(2, max_n));
  std::uniform_real_distribution<double> density(0.0, 0.7);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_connected_graph(order(rng), density(rng), rng));
  return out;
}

std::vector<PropertyResult> verify_gadgets(const std::vector<Graph>& corpus, const VerifyOptions& opt,
                                           std::vector<ReductionReport>* reports) {
  const std::vector<std::pair<std::string, int>> checks{
      {"odd gadget t=3: omega(G) = eq_3(H)", 3},   {"odd gadget t=5: omega(G) = eq_5(H)", 5},
      {"even gadget t=2: omega(G)+1 = eq_2(H)", 2}, {"even gadget t=4: omega(G)+1 = eq_4(H)", 4},
      {"join: eq(H) = omega(G)+n", 0}};
  std::vector<std::vector<ReductionReport>> all(corpus.size());
  parallel_for(corpus.size(), opt.threads, [&](std::size_t i) {
    for (const auto& [_, t] : checks) all[i].push_back(verify_reduction(corpus[i], t, opt.exact));
  });
  std::vector<PropertyResult> res;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    PropertyResult p;
    p.name = checks[c].first;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& r = all[i][c];
      ++p.cases;
      if (r.verdict == Verdict::inconclusive) ++p.inconclusive;
      else if (r.verdict != Verdict::verified) p.fail(r.to_json_line());
      else if (r.t == 0 && r.eq_argmax_t != 1) p.fail("join maximised at t != 1: " + r.to_json_line());
    }
    res.push_back(std::move(p));
  }
  if (reports)
    for (auto& v : all)
      for (auto& r : v) reports->push_back(std::move(r));
  return res;
}

std::vector<PropertyResult> verify_gadgets(const VerifyOptions& opt, std::vector<ReductionReport>* reports) {
  return verify_gadgets(random_nonsplit_corpus(opt.count, opt.max_n, opt.seed), opt, reports);
}

namespace {

bool witness_ok(const DistanceMatrix& d, const ExactResult& r, auto pred) {
  if (static_cast<int>(r.witness.size()) != r.value) return false;
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j)
      if (!pred(d.at(r.witness[i], r.witness[j]))) return false;
  return true;
}

}  // namespace

std::vector<PropertyResult> verify_relations(const VerifyOptions& opt) {
  const auto corpus = random_connected_corpus(opt.count, opt.max_n, opt.seed);
  PropertyResult chain = property("chain: alpha_t >= eq_t* for t < t*");
  PropertyResult diam = property("diameter: alpha_{t-1} = eq_t at t = diam, both 1 beyond");
  PropertyResult eq1 = property("eq_1 = omega");
  PropertyResult wit = property("witnesses satisfy their distance predicate");
  PropertyResult reduce = property("eq with range reduction = eq without");
  std::mutex mu;
  parallel_for(corpus.size(), opt.threads, [&](std::size_t gi) {
    const auto& g = corpus[gi];
    const auto label = encode_graph6(g);
    PropertyResult c{}, dm{}, e1{}, w{}, rr{};
    try {
      const auto d = all_pairs_distances(g);
      const int D = d.diameter();
      std::vector<ExactResult> eqs(D + 3), alphas(D + 3);
      for (int t = 0; t <= D + 1; ++t) {
        alphas[t] = alpha_t(d, t, opt.exact);
        if (t >= 1) eqs[t] = eq_t(d, t, opt.exact);
        ++w.cases;
        if (!witness_ok(d, alphas[t], [t](int x) { return x > t; }))
          w.fail(label + ": alpha_" + std::to_string(t) + " witness");
        if (t >= 1 && !witness_ok(d, eqs[t], [t](int x) { return x == t; }))
          w.fail(label + ": eq_" + std::to_string(t) + " witness");
      }
      for (int t = 1; t <= D + 1; ++t)
        for (int ts = t + 1; ts <= D + 1; ++ts) {
          ++c.cases;
          if (alphas[t].value < eqs[ts].value)
            c.fail(label + ": alpha_" + std::to_string(t) + "=" + std::to_string(alphas[t].value) + " < eq_" +
                   std::to_string(ts) + "=" + std::to_string(eqs[ts].value));
        }
      if (D >= 1) {
        ++dm.cases;
        if (alphas[D - 1].value != eqs[D].value)
          dm.fail(label + ": alpha_{diam-1}=" + std::to_string(alphas[D - 1].value) +
                  " eq_diam=" + std::to_string(eqs[D].value));
        ++dm.cases;
        if (alphas[D].value != 1 || eqs[D + 1].value != 1) dm.fail(label + ": beyond diameter not 1");
      }
      ++e1.cases;
      if (D >= 1 && eqs[1].value != max_clique(g, opt.exact).value) e1.fail(label);
      ++rr.cases;
      ExactOptions off = opt.exact;
      off.range_reduction = false;
      if (eq(g, opt.exact).value != eq(g, off).value) rr.fail(label);
    } catch (const BudgetExceeded&) {
      ++c.inconclusive;
    }
    std::lock_guard lock(mu);
    for (auto [dst, src] : {std::pair{&chain, &c}, {&diam, &dm}, {&eq1, &e1}, {&wit, &w}, {&reduce, &rr}}) {
      dst->cases += src->cases;
      dst->inconclusive += src->inconclusive;
      for (auto& f : src->failures) dst->fail(f);
      dst->failed += src->failed - src->failures.size();
    }
  });
  return {chain, diam, eq1, wit, reduce};
}

std::vector<PropertyResult> verify_johnson(const VerifyOptions& opt) {
  PropertyResult t3 = property("ratio_bound_t3(J(n,3)) = eq_3 = floor(n/3), n = 7..12");
  PropertyResult t4 = property("ratio_bound_t4(J(n,4)) = eq_4 = floor(n/4), n = 9..12");
  PropertyResult d3 = property("max diag A^3 of J(n,4) = k(n-k)(n-2)");
  struct Job {
    std::size_t n, k;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 7; n <= 12; ++n) jobs.push_back({n, 3});
  for (std::size_t n = 9; n <= 12; ++n) jobs.push_back({n, 4});
  std::mutex mu;
  parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
    const auto [n, k] = jobs[i];
    GraphAnalysis a(johnson(n, k));
    const auto bound = k == 3 ? ratio_bound_t3(a) : ratio_bound_t4(a);
    const auto ex = eq_t(a.distances(), static_cast<int>(k), opt.exact);
    const std::int64_t want = static_cast<std::int64_t>(n / k);
    std::ostringstream msg;
    msg << "J(" << n << "," << k << "): bound " << cell_text(bound) << ", exact " << ex.value << ", n/k floor " << want;
    std::lock_guard lock(mu);
    auto& p = k == 3 ? t3 : t4;
    ++p.cases;
    if (!bound.applicable() || *bound.value != want || ex.value != want) p.fail(msg.str());
    if (k == 4) {
      const auto w = a.walks(3);
      const double got = *std::max_element(w[3].begin(), w[3].end());
      ++d3.cases;
      if (got != static_cast<double>(k * (n - k) * (n - 2)))
        d3.fail("J(" + std::to_string(n) + ",4): " + std::to_string(got));
    }
  });
  return {t3, t4, d3};
}

std::vector<PropertyResult> verify_soundness(const VerifyOptions& opt) {
  struct Item {
    std::string label;
    Graph g;
  };
  std::vector<Item> items;
  for (const auto& name : builtin_names()) items.push_back({name, named_graph(name)});
  for (const auto& name : default_catalog().names()) items.push_back({name, *default_catalog().find(name)});
  for (std::size_t n = 4; n <= 8; ++n)
    for (std::size_t m = 1; m <= 3; ++m) items.push_back({"es_" + std::to_string(n) + "_" + std::to_string(m), extended_star(n, m)});
  items.push_back({"j_7_3", johnson(7, 3)});
  items.push_back({"j_9_4", johnson(9, 4)});
  items.push_back({"q_4", hypercube(4)});
  for (int m = 1; m <= 3; ++m) items.push_back({"chain_es_4_2_m" + std::to_string(m), chained_copies(extended_star(4, 2), m, 4)});
  auto rnd = random_connected_corpus(opt.count, std::max<std::size_t>(opt.max_n, 10), opt.seed);
  for (std::size_t i = 0; i < rnd.size(); ++i) items.push_back({"random:" + encode_graph6(rnd[i]), rnd[i]});

  PropertyResult eqt = property("every applicable eq_t bound >= eq_t");
  PropertyResult eql = property("every applicable eq bound >= eq");
  std::mutex mu;
  SuiteOptions so;
  so.exact = opt.exact;
  parallel_for(items.size(), opt.threads, [&](std::size_t i) {
    const auto& it = items[i];
    PropertyResult a{}, b{};
    try {
      GraphAnalysis an(it.g);
      const int tmax = std::min(an.distances().diameter() + 1, 4);
      for (int t = 1; t <= tmax; ++t) {
        BoundSuite s;
        try {
          s = suite(an, t, so);
        } catch (const DomainError& e) {
          a.fail(it.label + " t=" + std::to_string(t) + ": " + e.what());
          continue;
        }
        if (!s.exact) {
          ++a.inconclusive;
          continue;
        }
        const int ex = s.exact->value;
        std::vector<std::pair<std::string, BoundResult>> extra = s.bounds;
        if (t >= 2) extra.emplace_back("inertial(x^{t-1})", inertial_bound(an, t, Polynomial::monomial(t - 1)));
        if (t == 3) extra.emplace_back("ratio_t3", ratio_bound_t3(an));
        if (t == 4) extra.emplace_back("ratio_t4", ratio_bound_t4(an));
        for (const auto& [key, r] : extra) {
          if (!r.applicable()) continue;
          ++a.cases;
          if (*r.value < ex)
            a.fail(it.label + " t=" + std::to_string(t) + " " + key + "=" + std::to_string(*r.value) +
                   " < exact " + std::to_string(ex));
        }
      }
      SuiteOptions eo = so;
      const auto es = eq_suite(an, eo);
      if (es.exact) {
        for (const auto& [key, r] : es.bounds) {
          if (!r.applicable()) continue;
          ++b.cases;
          if (*r.value < es.exact->value)
            b.fail(it.label + " eq " + key + "=" + std::to_string(*r.value) + " < " + std::to_string(es.exact->value));
        }
      } else {
        ++b.inconclusive;
      }
    } catch (const std::exception& e) {
      a.fail(it.label + ": " + e.what());
    }
    std::lock_guard lock(mu);
    for (auto [dst, src] : {std::pair{&eqt, &a}, {&eql, &b}}) {
      dst->cases += src->cases;
      dst->inconclusive += src->inconclusive;
      for (auto& f : src->failures) dst->fail(f);
      dst->failed += src->failed - src->failures.size();
    }
  });
  return {eqt, eql};
}

namespace {

void emit(std::ostream& out, const std::string& suite, const PropertyResult& p) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["property"] = p.name;
  j["cases"] = p.cases;
  j["failed"] = p.failed;
  j["inconclusive"] = p.inconclusive;
  j["status"] = p.failed ? "fail" : p.inconclusive ? "inconclusive" : "pass";
  if (!p.failures.empty()) j["failures"] = p.failures;
  out << j.dump() << '\n';
}

}  // namespace

int cmd_verify(const std::string& which, const VerifyOptions& opt, std::ostream& out) {
  bool ok = true;
  bool any = false;
  auto run = [&](const std::string& name, const std::vector<PropertyResult>& results) {
    any = true;
    for (const auto& p : results) {
      emit(out, name, p);
      ok = ok && p.failed == 0;
    }
  };
  if (which == "gadgets" || which == "all") {
    std::vector<ReductionReport> reports;
    run("gadgets", verify_gadgets(opt, &reports));
    for (const auto& r : reports)
      if (r.verdict != Verdict::verified) out << r.to_json_line() << '\n';
  }
  if (which == "relations" || which == "all") {
    VerifyOptions o = opt;
    o.count = std::max<std::size_t>(opt.count, 100);
    o.max_n = std::max<std::size_t>(opt.max_n, 9);
    run("relations", verify_relations(o));
  }
  if (which == "johnson" || which == "all") run("johnson", verify_johnson(opt));
  if (which == "soundness" || which == "all") run("soundness", verify_soundness(opt));
  if (!any) throw DomainError("unknown verify suite '" + which + "'");
  return ok ? 0 : 2;
}

}  // namespace eqdist

#include "eqdist/suite.hpp"

#include "eqdist/errors.hpp"

namespace eqdist {

const std::vector<std::string>& eqt_bound_keys() {
  static const std::vector<std::string> keys{"degree", "inertial", "ratio", "haemers",
                                             "phi", "distance", "quotient1", "quotient2"};
  return keys;
}

const std::vector<std::string>& eq_bound_keys() {
  static const std::vector<std::string> keys{"distance", "combined"};
  return keys;
}

const BoundResult* BoundSuite::find(const std::string& key) const {
  for (const auto& [k, r] : bounds)
    if (k == key) return &r;
  return nullptr;
}

namespace {

bool wanted(const SuiteOptions& opt, const std::string& key) {
  return opt.only.empty() || opt.only.contains(key);
}

template <typename F>
void attempt_exact(BoundSuite& s, const SuiteOptions& opt, F solve) {
  if (!opt.compute_exact) return;
  try {
    s.exact = solve();
  } catch (const BudgetExceeded& e) {
    s.exact_error = e.what();
  }
}

}  // namespace

BoundSuite suite(const GraphAnalysis& a, int t, const SuiteOptions& opt) {
  if (t < 1) throw DomainError("suite needs t >= 1");
  BoundSuite s;
  s.n = a.order();
  s.t = t;
  std::optional<std::pair<BoundResult, BoundResult>> quotients;
  for (const auto& key : eqt_bound_keys()) {
    if (!wanted(opt, key)) continue;
    BoundResult r;
    if (key == "degree") {
      r = degree_bound(a.graph(), t);
    } else if (key == "inertial") {
      if (t >= 2) {
        auto o = optimize_inertial(a, t, opt.poly);
        r = o.bound;
        s.inertial_poly = o.p;
      } else {
        r = inertial_bound(a, t, Polynomial({0.0}));
      }
    } else if (key == "ratio") {
      if (t >= 2) {
        auto o = optimize_ratio(a, t, opt.poly);
        r = o.bound;
        if (r.applicable()) s.ratio_poly = o.p;
      } else {
        r = a.regular() ? BoundResult::not_applicable(NaReason::degenerate_denominator)
                        : BoundResult::not_applicable(NaReason::graph_not_regular);
      }
    } else if (key == "haemers") {
      r = haemers_power_bound(a, t);
    } else if (key == "phi") {
      r = phi_bound(a, t);
    } else if (key == "distance") {
      r = distance_bound(a, t);
    } else {
      if (!quotients) quotients = quotient_bounds(a, t);
      r = key == "quotient1" ? quotients->first : quotients->second;
    }
    s.bounds.emplace_back(key, r);
  }
  attempt_exact(s, opt, [&] { return eq_t(a.distances(), t, opt.exact); });
  return s;
}

BoundSuite suite(const Graph& g, int t, const SuiteOptions& opt) {
  return suite(GraphAnalysis(g, opt.tol), t, opt);
}

BoundSuite eq_suite(const GraphAnalysis& a, const SuiteOptions& opt) {
  BoundSuite s;
  s.n = a.order();
  s.t = 0;
  if (wanted(opt, "distance")) s.bounds.emplace_back("distance", eq_distance_bound(a));
  if (wanted(opt, "combined")) s.bounds.emplace_back("combined", eq_combined_bound(a));
  attempt_exact(s, opt, [&] { return eq(a.graph(), opt.exact); });
  return s;
}

BoundSuite eq_suite(const Graph& g, const SuiteOptions& opt) {
  return eq_suite(GraphAnalysis(g, opt.tol), opt);
}

}  // namespace eqdist

#include "eqdist/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "eqdist/errors.hpp"

namespace eqdist {

std::string_view to_string(NaReason r) {
  switch (r) {
    case NaReason::graph_not_regular: return "graph-not-regular";
    case NaReason::power_not_regular: return "power-not-regular";
    case NaReason::not_transmission_regular: return "not-transmission-regular";
    case NaReason::sign_condition_failed: return "sign-condition-failed";
    case NaReason::degenerate_denominator: return "degenerate-denominator";
    case NaReason::no_qualifying_eigenvalue: return "no-qualifying-eigenvalue";
  }
  return "unknown";
}

std::int64_t floor_bound(double raw) { return static_cast<std::int64_t>(std::floor(raw + 1e-9)); }

BoundResult BoundResult::from_raw(double raw) {
  BoundResult r;
  r.raw = raw;
  r.value = floor_bound(raw);
  return r;
}

BoundResult BoundResult::from_count(std::int64_t count) {
  BoundResult r;
  r.raw = static_cast<double>(count);
  r.value = count;
  return r;
}

BoundResult BoundResult::not_applicable(NaReason reason) {
  BoundResult r;
  r.na = reason;
  return r;
}

namespace {

constexpr int kPrecomputedWalks = 3;

}  // namespace

GraphAnalysis::GraphAnalysis(Graph g, Tolerances tol)
    : g_(std::move(g)), tol_(tol), d_(all_pairs_distances(g_)) {
  adj_ = eigenvalues(adjacency_matrix(g_));
  adj_distinct_ = distinct(adj_, tol_.group);
  regular_ = g_.is_regular();
  walks_ = walk_diagonals(g_, kPrecomputedWalks);
}

const Spectrum& GraphAnalysis::distance_spectrum() const {
  std::call_once(dist_once_, [this] { dist_ = eigenvalues(distance_matrix(d_)); });
  return dist_;
}

std::vector<std::vector<double>> GraphAnalysis::walks(int k) const {
  if (k <= kPrecomputedWalks) return {walks_.begin(), walks_.begin() + k + 1};
  return walk_diagonals(g_, k);
}

BoundResult degree_bound(const Graph& g, int t) {
  if (t < 1) throw DomainError("degree bound needs t >= 1");
  const auto delta = static_cast<std::int64_t>(g.max_degree());
  if (delta <= 1) return BoundResult::from_count(delta == 1 && t == 1 ? 2 : 1);
  // delta * (delta - 1)^(t - 1) + 1, saturating at the cap.
  std::int64_t acc = delta;
  bool saturated = false;
  for (int i = 1; i < t && !saturated; ++i) {
    if (acc > (kDegreeBoundCap - 1) / (delta - 1)) saturated = true;
    else acc *= delta - 1;
  }
  if (saturated) {
    auto r = BoundResult::from_count(kDegreeBoundCap);
    r.saturated = true;
    return r;
  }
  return BoundResult::from_count(acc + 1);
}

namespace {

void check_poly_degree(const Polynomial& p, int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  if (p.degree() > t - 1)
    throw DomainError("polynomial degree " + std::to_string(p.degree()) + " exceeds t - 1 = " +
                      std::to_string(t - 1));
}

std::pair<double, double> diagonal_extremes(const GraphAnalysis& a, const Polynomial& p) {
  const auto w = a.walks(p.degree());
  double lo = INFINITY, hi = -INFINITY;
  for (Vertex v = 0; v < a.order(); ++v) {
    const double x = p.at_diagonal(w, v);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

// Largest distinct eigenvalue index i >= 0 with thetas[i] <= threshold (with slack), or -1.
int largest_at_most(const DistinctSpectrum& s, double threshold, double slack) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.thetas[i] <= threshold + slack) return static_cast<int>(i);
  return -1;
}

}  // namespace

BoundResult inertial_bound(const GraphAnalysis& a, int t, const Polynomial& p) {
  check_poly_degree(p, t);
  const auto [w, W] = diagonal_extremes(a, p);
  const double slack = a.tolerances().slack;
  std::int64_t above = 0, below = 0;
  for (double lam : a.adjacency().values) {
    const double x = p(lam);
    if (x >= w - slack * (1 + std::abs(w))) ++above;
    if (x <= W + slack * (1 + std::abs(W))) ++below;
  }
  return BoundResult::from_count(std::min(above, below));
}

BoundResult ratio_bound(const GraphAnalysis& a, int t, const Polynomial& p) {
  check_poly_degree(p, t);
  if (!a.regular()) return BoundResult::not_applicable(NaReason::graph_not_regular);
  const auto& lam = a.adjacency().values;
  if (lam.size() < 2) return BoundResult::not_applicable(NaReason::degenerate_denominator);
  const double W = diagonal_extremes(a, p).second;
  double low = INFINITY;
  for (std::size_t i = 1; i < lam.size(); ++i) low = std::min(low, p(lam[i]));
  const double top = p(lam[0]);
  if (!(top - low > a.tolerances().slack * (1 + std::abs(top))))
    return BoundResult::not_applicable(NaReason::degenerate_denominator);
  return BoundResult::from_raw(a.order() * (W - low) / (top - low));
}

BoundResult ratio_bound_t3(const GraphAnalysis& a) {
  if (!a.regular()) return BoundResult::not_applicable(NaReason::graph_not_regular);
  const auto& s = a.adjacency_distinct();
  if (s.size() < 3) return BoundResult::not_applicable(NaReason::no_qualifying_eigenvalue);
  const int i = largest_at_most(s, -1.0, a.tolerances().slack);
  if (i <= 0) return BoundResult::not_applicable(NaReason::no_qualifying_eigenvalue);
  const double t0 = s.thetas[0], ti = s.thetas[i], tp = s.thetas[i - 1];
  const double den = (t0 - ti) * (t0 - tp);
  if (!(den > 0)) return BoundResult::not_applicable(NaReason::degenerate_denominator);
  return BoundResult::from_raw(a.order() * (t0 + ti * tp) / den);
}

BoundResult ratio_bound_t4(const GraphAnalysis& a) {
  if (!a.regular()) return BoundResult::not_applicable(NaReason::graph_not_regular);
  const auto& s = a.adjacency_distinct();
  if (s.size() < 4) return BoundResult::not_applicable(NaReason::no_qualifying_eigenvalue);
  const auto w = a.walks(3);
  const double delta3 = *std::max_element(w[3].begin(), w[3].end());
  const double t0 = s.thetas[0], td = s.thetas.back();
  const double threshold = -(t0 * t0 + t0 * td - delta3) / (t0 * (td + 1));
  const int k = largest_at_most(s, threshold, a.tolerances().slack);
  if (k <= 0) return BoundResult::not_applicable(NaReason::no_qualifying_eigenvalue);
  const double ts = s.thetas[k], tp = s.thetas[k - 1];
  const double den = (t0 - ts) * (t0 - tp) * (t0 - td);
  if (!(den > 0)) return BoundResult::not_applicable(NaReason::degenerate_denominator);
  return BoundResult::from_raw(a.order() * (delta3 - t0 * (ts + tp + td) - ts * tp * td) / den);
}

BoundResult haemers_power_bound(const GraphAnalysis& a, int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  const Graph h = exact_distance_power(a.distances(), t);
  if (!h.is_regular()) return BoundResult::not_applicable(NaReason::power_not_regular);
  const auto beta = eigenvalues(adjacency_matrix(h));
  const double n = static_cast<double>(a.order());
  if (beta.size() < 2) return BoundResult::from_count(1);
  const double den = n - beta[0] + beta[1];
  // den vanishes exactly when G^[#t] is complete
  if (!(den > a.tolerances().slack)) return BoundResult::not_applicable(NaReason::degenerate_denominator);
  return BoundResult::from_raw(n * (1 + beta[1]) / den);
}

BoundResult phi_bound(const GraphAnalysis& a, int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  const Graph c = complement(exact_distance_power(a.distances(), t));
  auto mu = eigenvalues(laplacian_matrix(c)).values;
  std::reverse(mu.begin(), mu.end());  // ascending
  if (mu.size() < 2 || !(mu.back() > a.tolerances().slack))
    return BoundResult::not_applicable(NaReason::degenerate_denominator);
  const double n = static_cast<double>(a.order());
  return BoundResult::from_raw(n * (1 - mu[1] / mu.back()) + 1);
}

BoundResult distance_bound(const GraphAnalysis& a, int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  std::int64_t c = 0;
  for (double x : a.distance_spectrum().values)
    if (x <= -t + a.tolerances().slack) ++c;
  return BoundResult::from_count(c + 1);
}

std::pair<BoundResult, BoundResult> quotient_bounds(const GraphAnalysis& a, int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  const auto& dm = a.distances();
  if (!dm.transmission_regular() || a.order() < 2) {
    const auto na = BoundResult::not_applicable(NaReason::not_transmission_regular);
    return {na, na};
  }
  const double n = static_cast<double>(a.order());
  const double d = static_cast<double>(dm.transmission(0));
  const auto& s = a.distance_spectrum().values;
  const double l2 = s[1], ln = s.back();
  // Denominators that vanish up to roundoff satisfy neither strict sign condition.
  const double guard = a.tolerances().slack * (1 + std::abs(d));
  const double q1 = t * n - d + l2;
  const double q2 = t * n - d + ln;
  BoundResult first = q1 > guard ? BoundResult::from_raw((l2 + t) * n / q1)
                                 : BoundResult::not_applicable(NaReason::sign_condition_failed);
  BoundResult second = q2 < -guard ? BoundResult::from_raw((ln + t) * n / q2)
                                   : BoundResult::not_applicable(NaReason::sign_condition_failed);
  return {first, second};
}

BoundResult eq_distance_bound(const GraphAnalysis& a) { return distance_bound(a, 1); }

BoundResult eq_combined_bound(const GraphAnalysis& a) {
  if (!a.regular()) return BoundResult::not_applicable(NaReason::graph_not_regular);
  const auto& lam = a.adjacency().values;
  const double n = static_cast<double>(a.order());
  if (lam.size() < 2 || !(lam.front() - lam.back() > a.tolerances().slack))
    return BoundResult::not_applicable(NaReason::degenerate_denominator);
  const double l1 = lam.front(), l2 = lam[1], ln = lam.back();
  const double hoffman = -ln / (l1 - ln);
  // Complete graphs make the clique term 0/0.
  if (!(n - l1 + l2 > a.tolerances().slack)) return BoundResult::not_applicable(NaReason::degenerate_denominator);
  const double haemers = (1 + l2) / (n - l1 + l2);
  return BoundResult::from_raw(n * std::max(hoffman, haemers));
}

BoundResult inertial_bound(const Graph& g, int t, const Polynomial& p) {
  return inertial_bound(GraphAnalysis(g), t, p);
}
BoundResult ratio_bound(const Graph& g, int t, const Polynomial& p) {
  return ratio_bound(GraphAnalysis(g), t, p);
}
BoundResult ratio_bound_t3(const Graph& g) { return ratio_bound_t3(GraphAnalysis(g)); }
BoundResult ratio_bound_t4(const Graph& g) { return ratio_bound_t4(GraphAnalysis(g)); }
BoundResult haemers_power_bound(const Graph& g, int t) { return haemers_power_bound(GraphAnalysis(g), t); }
BoundResult phi_bound(const Graph& g, int t) { return phi_bound(GraphAnalysis(g), t); }
BoundResult distance_bound(const Graph& g, int t) { return distance_bound(GraphAnalysis(g), t); }
std::pair<BoundResult, BoundResult> quotient_bounds(const Graph& g, int t) {
  return quotient_bounds(GraphAnalysis(g), t);
}
BoundResult eq_distance_bound(const Graph& g) { return eq_distance_bound(GraphAnalysis(g)); }
BoundResult eq_combined_bound(const Graph& g) { return eq_combined_bound(GraphAnalysis(g)); }

}  // namespace eqdist

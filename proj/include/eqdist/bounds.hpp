#pragma once

#include <array>
#include <mutex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqdist/graph.hpp"
#include "eqdist/polynomial.hpp"
#include "eqdist/spectra.hpp"

namespace eqdist {

enum class NaReason {
  graph_not_regular,
  power_not_regular,
  not_transmission_regular,
  sign_condition_failed,
  degenerate_denominator,
  no_qualifying_eigenvalue,
};

std::string_view to_string(NaReason r);

struct Tolerances {
  double group = kDefaultGroupTol;  // relative, for distinct()
  double slack = 1e-7;              // threshold comparisons lean toward inclusion by this much
  double eps = 1e-6;                // strict inequalities in the polynomial LPs
};

/// Either an integer upper bound (floor(raw + 1e-9)) or a not-applicable reason.
struct BoundResult {
  std::optional<std::int64_t> value;
  double raw = 0.0;
  std::optional<NaReason> na;
  bool saturated = false;  // value is a cap, the true bound is at least this

  bool applicable() const noexcept { return value.has_value(); }

  static BoundResult from_raw(double raw);
  static BoundResult from_count(std::int64_t count);
  static BoundResult not_applicable(NaReason r);
};

std::int64_t floor_bound(double raw);

/// Everything the bounds need about one graph, computed once.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(Graph g, Tolerances tol = {});

  const Graph& graph() const noexcept { return g_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  std::size_t order() const noexcept { return g_.order(); }
  const DistanceMatrix& distances() const noexcept { return d_; }
  const Spectrum& adjacency() const noexcept { return adj_; }
  const DistinctSpectrum& adjacency_distinct() const noexcept { return adj_distinct_; }
  /// Computed on first use; safe to call from several threads.
  const Spectrum& distance_spectrum() const;
  bool regular() const noexcept { return regular_; }
  /// (A^i)_vv for i <= k; k above the precomputed depth is computed on the fly.
  std::vector<std::vector<double>> walks(int k) const;

 private:
  Graph g_;
  Tolerances tol_;
  DistanceMatrix d_;
  Spectrum adj_;
  DistinctSpectrum adj_distinct_;
  mutable std::once_flag dist_once_;
  mutable Spectrum dist_;
  bool regular_ = false;
  std::vector<std::vector<double>> walks_;
};

inline constexpr std::int64_t kDegreeBoundCap = 1'000'000'000'000'000'000;

// Bounds on eq_t. Polynomial bounds take p with degree <= t - 1.
BoundResult degree_bound(const Graph& g, int t);
BoundResult inertial_bound(const GraphAnalysis& a, int t, const Polynomial& p);
BoundResult ratio_bound(const GraphAnalysis& a, int t, const Polynomial& p);
BoundResult ratio_bound_t3(const GraphAnalysis& a);
BoundResult ratio_bound_t4(const GraphAnalysis& a);
BoundResult haemers_power_bound(const GraphAnalysis& a, int t);
BoundResult phi_bound(const GraphAnalysis& a, int t);
BoundResult distance_bound(const GraphAnalysis& a, int t);
std::pair<BoundResult, BoundResult> quotient_bounds(const GraphAnalysis& a, int t);

// Bounds on eq.
BoundResult eq_distance_bound(const GraphAnalysis& a);
BoundResult eq_combined_bound(const GraphAnalysis& a);

// Graph-taking conveniences.
BoundResult inertial_bound(const Graph& g, int t, const Polynomial& p);
BoundResult ratio_bound(const Graph& g, int t, const Polynomial& p);
BoundResult ratio_bound_t3(const Graph& g);
BoundResult ratio_bound_t4(const Graph& g);
BoundResult haemers_power_bound(const Graph& g, int t);
BoundResult phi_bound(const Graph& g, int t);
BoundResult distance_bound(const Graph& g, int t);
std::pair<BoundResult, BoundResult> quotient_bounds(const Graph& g, int t);
BoundResult eq_distance_bound(const Graph& g);
BoundResult eq_combined_bound(const Graph& g);

}  // namespace eqdist

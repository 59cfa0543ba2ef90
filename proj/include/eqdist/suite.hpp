#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqdist/bounds.hpp"
#include "eqdist/exact.hpp"
#include "eqdist/polyopt.hpp"

namespace eqdist {

/// Column keys of an eq_t row, in table order.
const std::vector<std::string>& eqt_bound_keys();
/// Column keys of an eq row, in table order.
const std::vector<std::string>& eq_bound_keys();

struct SuiteOptions {
  Tolerances tol;
  PolyOptions poly;
  ExactOptions exact;
  bool compute_exact = true;
  std::set<std::string> only;  // empty means every bound
};

struct BoundSuite {
  std::string graph;
  std::size_t n = 0;
  int t = 0;  // 0 marks an eq row
  std::vector<std::pair<std::string, BoundResult>> bounds;
  std::optional<ExactResult> exact;
  std::string exact_error;  // set when the exact solve was attempted and failed
  std::optional<Polynomial> inertial_poly, ratio_poly;

  const BoundResult* find(const std::string& key) const;
};

BoundSuite suite(const GraphAnalysis& a, int t, const SuiteOptions& opt = {});
BoundSuite suite(const Graph& g, int t, const SuiteOptions& opt = {});
BoundSuite eq_suite(const GraphAnalysis& a, const SuiteOptions& opt = {});
BoundSuite eq_suite(const Graph& g, const SuiteOptions& opt = {});

}  // namespace eqdist

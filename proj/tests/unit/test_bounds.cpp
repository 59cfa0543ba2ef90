#include <doctest.h>

#include <random>

#include "eqdist/bounds.hpp"
#include "eqdist/errors.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"
#include "eqdist/random.hpp"
#include "eqdist/suite.hpp"
#include "oracles.hpp"

using namespace eqdist;

namespace {

std::int64_t value(const BoundResult& r) {
  REQUIRE(r.applicable());
  return *r.value;
}

NaReason reason(const BoundResult& r) {
  REQUIRE_FALSE(r.applicable());
  return *r.na;
}

std::vector<std::string> row(const BoundSuite& s) {
  std::vector<std::string> out;
  for (const auto& [_, r] : s.bounds) out.push_back(r.applicable() ? std::to_string(*r.value) : "-");
  out.push_back(s.exact ? std::to_string(s.exact->value) : "?");
  return out;
}

}  // namespace

TEST_CASE("floor with tolerance") {
  CHECK(floor_bound(3.0) == 3);
  CHECK(floor_bound(2.9999999999) == 3);
  CHECK(floor_bound(2.99) == 2);
  CHECK(BoundResult::from_raw(4.5).value == 4);
}

TEST_CASE("degree bound") {
  CHECK(value(degree_bound(petersen(), 2)) == 7);
  CHECK(value(degree_bound(petersen(), 3)) == 13);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(value(degree_bound(star_graph(n), 1)) == std::int64_t(n));
  const auto big = degree_bound(complete_graph(60), 12);
  CHECK(big.saturated);
  CHECK(value(big) == kDegreeBoundCap);
  CHECK_FALSE(degree_bound(complete_graph(60), 2).saturated);
}

TEST_CASE("inertial bound with fixed polynomials") {
  const Graph p = petersen();
  CHECK(value(inertial_bound(p, 2, Polynomial({0.0}))) == 10);
  // p(x) = x: diagonal is 0, so count eigenvalues >= 0 and <= 0
  CHECK(value(inertial_bound(p, 2, Polynomial::monomial(1))) == 4);
  CHECK_THROWS_AS(inertial_bound(p, 2, Polynomial::monomial(2)), DomainError);
}

TEST_CASE("ratio bound with fixed polynomials") {
  CHECK(value(ratio_bound(thomsen(), 2, Polynomial::monomial(1))) == 3);
  CHECK(value(ratio_bound(petersen(), 2, Polynomial::monomial(1))) == 4);
  CHECK(reason(ratio_bound(named_graph("moser_spindle"), 2, Polynomial::monomial(1))) == NaReason::graph_not_regular);
}

TEST_CASE("closed-form bounds for t = 3 and t = 4") {
  CHECK(value(ratio_bound_t3(johnson(7, 3))) == 2);
  CHECK(value(ratio_bound_t3(johnson(9, 3))) == 3);
  CHECK(value(ratio_bound_t3(coxeter())) == 7);
  CHECK(value(ratio_bound_t4(johnson(9, 4))) == 2);
  CHECK(value(ratio_bound_t4(johnson(12, 4))) == 3);
  CHECK(reason(ratio_bound_t3(named_graph("moser_spindle"))) == NaReason::graph_not_regular);
}

TEST_CASE("clique bound on the exact distance power") {
  CHECK(value(haemers_power_bound(petersen(), 2)) == 4);
  // Heawood^[#2] is two disjoint K7: 14 * 7 / 14
  CHECK(value(haemers_power_bound(heawood(), 2)) == 7);
  CHECK(value(haemers_power_bound(named_graph("truncated_tetrahedron"), 3)) == 3);
  CHECK(reason(haemers_power_bound(named_graph("frucht"), 2)) == NaReason::power_not_regular);
  CHECK(reason(haemers_power_bound(complete_graph(5), 1)) == NaReason::degenerate_denominator);
}

TEST_CASE("Laplacian bound on the complement of the exact distance power") {
  // complement of Petersen^[#2] is Petersen, Laplacian spectrum {0, 2^5, 5^4}
  CHECK(value(phi_bound(petersen(), 2)) == 7);
  // Petersen^[#3] is empty, complement K10 has Laplacian {0, 10^9}
  CHECK(value(phi_bound(petersen(), 3)) == 1);
  CHECK(value(phi_bound(named_graph("moser_spindle"), 3)) == 1);
}

TEST_CASE("distance-matrix bound") {
  CHECK(value(distance_bound(petersen(), 2)) == 6);
  CHECK(value(distance_bound(thomsen(), 3)) == 1);
  CHECK(value(distance_bound(hexahedron(), 2)) == 4);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = random_connected_graph(3 + rng() % 10, 0.3, rng);
    const auto d = distance_matrix(all_pairs_distances(g));
    for (int t = 1; t <= 3; ++t)
      CHECK(value(distance_bound(g, t)) == oracle::eigen_count_below(d, -t + 3.14159e-8) + 1);
  }
}

TEST_CASE("quotient bounds") {
  auto [a, b] = quotient_bounds(petersen(), 2);
  CHECK(value(a) == 4);
  CHECK_FALSE(b.applicable());
  std::tie(a, b) = quotient_bounds(heawood(), 2);
  CHECK(value(a) == 21);
  CHECK(value(b) == 10);
  CHECK(reason(quotient_bounds(named_graph("frucht"), 2).first) == NaReason::not_transmission_regular);
  if (auto g = try_named_graph("gosset")) CHECK(value(quotient_bounds(*g, 2).first) == 4);
}

TEST_CASE("bounds on the equidistant number") {
  CHECK(value(eq_distance_bound(petersen())) == 6);
  CHECK(value(eq_distance_bound(hexahedron())) == 4);
  CHECK(value(eq_distance_bound(heawood())) == 8);
  CHECK(value(eq_combined_bound(petersen())) == 4);
  CHECK(value(eq_combined_bound(thomsen())) == 3);
  CHECK(reason(eq_combined_bound(named_graph("moser_spindle"))) == NaReason::graph_not_regular);
  CHECK(reason(eq_combined_bound(complete_graph(4))) == NaReason::degenerate_denominator);
}

TEST_CASE("suite rows") {
  CHECK(row(suite(petersen(), 2)) == std::vector<std::string>{"7", "4", "4", "4", "7", "6", "4", "-", "4"});
  CHECK(row(suite(heawood(), 2)) == std::vector<std::string>{"7", "7", "7", "7", "8", "8", "21", "10", "7"});
  const auto oct = suite(octahedron(), 3);
  CHECK(value(*oct.find("distance")) == 1);
  CHECK(oct.exact->value == 1);
  CHECK(row(eq_suite(petersen())) == std::vector<std::string>{"6", "4", "4"});

  SuiteOptions only;
  only.only = {"distance"};
  only.compute_exact = false;
  const auto s = suite(petersen(), 2, only);
  REQUIRE(s.bounds.size() == 1);
  CHECK(s.bounds[0].first == "distance");
  CHECK_FALSE(s.exact);
}

TEST_CASE("every applicable bound is at least the exhaustive value") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = random_connected_graph(2 + rng() % 9, 0.1 + 0.5 * double(rng() % 100) / 100.0, rng);
    CAPTURE(encode_graph6(g));
    GraphAnalysis a(g);
    for (int t = 1; t <= std::min(oracle::diameter(g) + 1, 4); ++t) {
      SuiteOptions opt;
      opt.compute_exact = false;
      const int truth = oracle::eq_t(g, t);
      for (const auto& [key, r] : suite(a, t, opt).bounds) {
        CAPTURE(key);
        CAPTURE(t);
        if (r.applicable()) CHECK(*r.value >= truth);
      }
    }
    const int truth = oracle::eq(g);
    for (const auto& [key, r] : eq_suite(a, {.compute_exact = false}).bounds)
      if (r.applicable()) CHECK(*r.value >= truth);
  }
}

#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "eqdist/errors.hpp"
#include "eqdist/lp.hpp"

using namespace eqdist;

namespace {

// Solves the square system rows * x = rhs by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-10) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Best vertex of a bounded polytope by trying every choice of tight constraints.
std::optional<double> vertex_enumeration(const LPProblem& p) {
  const std::size_t n = p.num_vars, m = p.constraints.size();
  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t depth, std::size_t from) {
    if (depth == n) {
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      for (auto i : pick) {
        a.push_back(p.constraints[i].coeffs);
        b.push_back(p.constraints[i].rhs);
      }
      auto x = solve_square(a, b);
      if (!x || max_violation(p, *x) > 1e-7) return;
      double obj = 0;
      for (std::size_t j = 0; j < n; ++j) obj += p.objective[j] * (*x)[j];
      if (!best || (p.sense == Sense::maximize ? obj > *best : obj < *best)) best = obj;
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick[depth] = i;
      go(depth + 1, i + 1);
    }
  };
  go(0, 0);
  return best;
}

}  // namespace

TEST_CASE("small programs") {
  LPProblem a{.num_vars = 1, .objective = {1}};
  a.add({1}, Relation::le, 3);
  auto r = solve_lp(a);
  CHECK(r.status == LPStatus::optimal);
  CHECK(r.x[0] == doctest::Approx(3));

  LPProblem b{.num_vars = 1, .objective = {1}};
  b.add({1}, Relation::ge, 1).add({1}, Relation::le, 0);
  CHECK(solve_lp(b).status == LPStatus::infeasible);

  LPProblem c{.num_vars = 2, .objective = {1, 1}};
  c.kinds = {VarKind::nonnegative, VarKind::nonnegative};
  c.add({1, 1}, Relation::le, 1);
  r = solve_lp(c);
  CHECK(r.status == LPStatus::optimal);
  CHECK(r.objective == doctest::Approx(1));

  LPProblem d{.num_vars = 1, .objective = {1}};
  d.add({1}, Relation::ge, 0);
  CHECK(solve_lp(d).status == LPStatus::unbounded);

  LPProblem e{.num_vars = 2, .objective = {1, -2}, .sense = Sense::minimize};
  e.add({1, 0}, Relation::eq, 2).add({0, 1}, Relation::le, 5).add({1, 1}, Relation::ge, -10);
  r = solve_lp(e);
  CHECK(r.status == LPStatus::optimal);
  CHECK(r.objective == doctest::Approx(-8));

  LPProblem bad{.num_vars = 2, .objective = {1}};
  CHECK_THROWS_AS(solve_lp(bad), DomainError);
  LPProblem bad_row{.num_vars = 2, .objective = {1, 1}};
  bad_row.add({1}, Relation::le, 1);
  CHECK_THROWS_AS(solve_lp(bad_row), DomainError);
}

TEST_CASE("degenerate program terminates") {
  // classic cycling example under the largest-coefficient rule
  LPProblem p{.num_vars = 4, .objective = {0.75, -20, 0.5, -6}};
  p.kinds.assign(4, VarKind::nonnegative);
  p.add({0.25, -8, -1, 9}, Relation::le, 0).add({0.5, -12, -0.5, 3}, Relation::le, 0).add({0, 0, 1, 0}, Relation::le, 1);
  const auto r = solve_lp(p);
  CHECK(r.status == LPStatus::optimal);
  CHECK(r.objective == doctest::Approx(1.25));
}

TEST_CASE("random bounded programs agree with vertex enumeration") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + rng() % 2;
    LPProblem p;
    p.num_vars = n;
    p.sense = rng() % 2 ? Sense::maximize : Sense::minimize;
    for (std::size_t j = 0; j < n; ++j) p.objective.push_back(u(rng));
    for (std::size_t j = 0; j < n; ++j) {  // box keeps it bounded
      std::vector<double> row(n, 0.0);
      row[j] = 1;
      p.add(row, Relation::le, 10);
      p.add(row, Relation::ge, -10);
    }
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<double> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(u(rng));
      p.add(row, rng() % 2 ? Relation::le : Relation::ge, u(rng));
    }
    const auto want = vertex_enumeration(p);
    const auto got = solve_lp(p);
    CAPTURE(rep);
    if (!want) {
      CHECK(got.status == LPStatus::infeasible);
    } else {
      REQUIRE(got.status == LPStatus::optimal);
      CHECK(got.objective == doctest::Approx(*want).epsilon(1e-7));
      CHECK(max_violation(p, got.x) <= 1e-7);
    }
  }
}

#pragma once

#include <cstddef>
#include <vector>

#include "eqdist/graph.hpp"

namespace eqdist {

/// p(x) = coeffs[0] + coeffs[1] x + ... ; evaluation at A means sum coeffs[i] A^i.
struct Polynomial {
  std::vector<double> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {}
  static Polynomial monomial(int k);

  /// Index of the highest non-zero coefficient; 0 for the zero polynomial.
  int degree() const noexcept;
  double operator()(double x) const noexcept;
  /// Diagonal entry of p(A) at v from walk diagonals w[i][v] = (A^i)_vv.
  double at_diagonal(const std::vector<std::vector<double>>& w, Vertex v) const;

  Polynomial operator-() const;
};

/// w[i][v] = (A^i)_vv for 0 <= i <= k.
std::vector<std::vector<double>> walk_diagonals(const Graph& g, int k);

}  // namespace eqdist

#pragma once

#include <cstddef>
#include <vector>

#include "eqdist/graph.hpp"

namespace eqdist {

/// Dense real square matrix, row-major. Symmetry is checked by the eigensolver,
/// not on every write.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  const std::vector<double>& data() const noexcept { return a_; }

  double trace() const noexcept;
  double frobenius() const noexcept;

  static SymMatrix identity(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

SymMatrix multiply(const SymMatrix& a, const SymMatrix& b);

/// Eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
  double largest() const noexcept { return values.front(); }
  double smallest() const noexcept { return values.back(); }
};

/// Distinct eigenvalues thetas[0] > thetas[1] > ... with multiplicities.
struct DistinctSpectrum {
  std::vector<double> thetas;
  std::vector<int> mults;

  std::size_t size() const noexcept { return thetas.size(); }
};

struct EigenDecomposition {
  Spectrum spectrum;
  SymMatrix vectors;  // column j pairs with spectrum.values[j]
  int sweeps = 0;
};

SymMatrix adjacency_matrix(const Graph& g);
/// L = Deg - A.
SymMatrix laplacian_matrix(const Graph& g);
SymMatrix distance_matrix(const DistanceMatrix& d);

/// Cyclic Jacobi. Throws DomainError if m is not symmetric to 1e-12 relative.
Spectrum eigenvalues(const SymMatrix& m);
EigenDecomposition eigen_decompose(const SymMatrix& m);

inline constexpr double kDefaultGroupTol = 1e-6;

/// Groups sorted eigenvalues whose consecutive gap is <= rel_tol * (1 + max|lambda|).
DistinctSpectrum distinct(const Spectrum& s, double rel_tol = kDefaultGroupTol);

}  // namespace eqdist

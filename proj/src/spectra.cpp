#include "eqdist/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eqdist/errors.hpp"

namespace eqdist {

double SymMatrix::trace() const noexcept {
  double s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

double SymMatrix::frobenius() const noexcept {
  double s = 0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SymMatrix multiply(const SymMatrix& a, const SymMatrix& b) {
  const auto n = a.size();
  if (b.size() != n) throw DomainError("matrix dimension mismatch");
  SymMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0;
  return m;
}

SymMatrix laplacian_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [u, v] : g.edges()) {
    m(u, v) = m(v, u) = -1.0;
    m(u, u) += 1.0;
    m(v, v) += 1.0;
  }
  return m;
}

SymMatrix distance_matrix(const DistanceMatrix& d) {
  const auto n = d.order();
  SymMatrix m(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) m(u, v) = d.at(u, v);
  return m;
}

namespace {

void check_symmetric(const SymMatrix& m) {
  const auto n = m.size();
  const double scale = std::max(1.0, m.frobenius());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale)
        throw DomainError("eigensolver input is not symmetric");
}

double off_norm(const SymMatrix& a) {
  double s = 0;
  const auto n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Cyclic Jacobi on a working copy; v accumulates rotations when non-null.
int jacobi(SymMatrix& a, SymMatrix* v) {
  const auto n = a.size();
  const double target = 1e-12 * a.frobenius();
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (v) {
          for (std::size_t r = 0; r < n; ++r) {
            const double vrp = (*v)(r, p), vrq = (*v)(r, q);
            (*v)(r, p) = c * vrp - s * vrq;
            (*v)(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
  return sweep;
}

}  // namespace

EigenDecomposition eigen_decompose(const SymMatrix& m) {
  check_symmetric(m);
  const auto n = m.size();
  SymMatrix a = m;
  SymMatrix v = SymMatrix::identity(n);
  EigenDecomposition out;
  out.sweeps = jacobi(a, &v);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  out.spectrum.values.resize(n);
  out.vectors = SymMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.spectrum.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Spectrum eigenvalues(const SymMatrix& m) {
  check_symmetric(m);
  SymMatrix a = m;
  jacobi(a, nullptr);
  Spectrum s;
  s.values.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) s.values[i] = a(i, i);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

DistinctSpectrum distinct(const Spectrum& s, double rel_tol) {
  DistinctSpectrum out;
  if (s.values.empty()) return out;
  double maxabs = 0;
  for (double x : s.values) maxabs = std::max(maxabs, std::abs(x));
  const double tol = rel_tol * (1.0 + maxabs);
  double sum = s.values[0];
  int count = 1;
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    if (s.values[i - 1] - s.values[i] <= tol) {
      sum += s.values[i];
      ++count;
    } else {
      out.thetas.push_back(sum / count);
      out.mults.push_back(count);
      sum = s.values[i];
      count = 1;
    }
  }
  out.thetas.push_back(sum / count);
  out.mults.push_back(count);
  return out;
}

}  // namespace eqdist

#include "eqdist/polynomial.hpp"

#include "eqdist/errors.hpp"
#include "eqdist/spectra.hpp"

namespace eqdist {

Polynomial Polynomial::monomial(int k) {
  std::vector<double> c(k + 1, 0.0);
  c[k] = 1.0;
  return Polynomial(std::move(c));
}

int Polynomial::degree() const noexcept {
  for (int i = static_cast<int>(coeffs.size()) - 1; i > 0; --i)
    if (coeffs[i] != 0.0) return i;
  return 0;
}

double Polynomial::operator()(double x) const noexcept {
  double r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

double Polynomial::at_diagonal(const std::vector<std::vector<double>>& w, Vertex v) const {
  if (static_cast<std::size_t>(degree()) >= w.size())
    throw DomainError("walk diagonals too shallow for polynomial degree");
  double r = 0;
  for (std::size_t i = 0; i < coeffs.size() && i < w.size(); ++i) r += coeffs[i] * w[i][v];
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial q = *this;
  for (auto& c : q.coeffs) c = -c;
  return q;
}

std::vector<std::vector<double>> walk_diagonals(const Graph& g, int k) {
  const auto n = g.order();
  std::vector<std::vector<double>> w;
  w.emplace_back(n, 1.0);
  if (k >= 1) w.emplace_back(n, 0.0);
  if (k >= 2) {
    std::vector<double> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<double>(g.degree(v));
    w.push_back(deg);
  }
  if (k >= 3) {
    const SymMatrix a = adjacency_matrix(g);
    SymMatrix p = multiply(a, a);
    for (int i = 3; i <= k; ++i) {
      p = multiply(p, a);
      std::vector<double> d(n);
      for (std::size_t v = 0; v < n; ++v) d[v] = p(v, v);
      w.push_back(std::move(d));
    }
  }
  return w;
}

}  // namespace eqdist

#include "eqdist/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eqdist/errors.hpp"

namespace eqdist {

std::string_view to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Tableau rows 0..m-1 hold constraints, row m the objective (minimization,
// reduced costs). Column `cols` is the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t cols) : m_(m), cols_(cols), t_((m + 1) * (cols + 1), 0.0), basis_(m) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(m_, c); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double pv = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= pv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  // Minimizes the objective row over columns < active. Returns false when unbounded.
  bool run(std::size_t active, int& pivots) {
    for (;;) {
      std::size_t enter = active;
      for (std::size_t j = 0; j < active; ++j)
        if (cost(j) < -kPivotTol) {
          enter = j;
          break;
        }
      if (enter == active) return true;
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotTol) continue;
        const double ratio = rhs(i) / a;
        if (ratio < best - 1e-12 || (ratio <= best + 1e-12 && leave < m_ && basis_[i] < basis_[leave])) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void remove_row(std::size_t r) {
    const std::size_t w = cols_ + 1;
    t_.erase(t_.begin() + r * w, t_.begin() + (r + 1) * w);
    basis_.erase(basis_.begin() + r);
    --m_;
  }

 private:
  std::size_t m_, cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

double max_violation(const LPProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& c : p.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    double v = 0.0;
    switch (c.rel) {
      case Relation::le: v = lhs - c.rhs; break;
      case Relation::ge: v = c.rhs - lhs; break;
      case Relation::eq: v = std::abs(lhs - c.rhs); break;
    }
    worst = std::max(worst, v);
  }
  for (std::size_t j = 0; j < p.num_vars; ++j)
    if (!p.kinds.empty() && p.kinds[j] == VarKind::nonnegative) worst = std::max(worst, -x[j]);
  return worst;
}

LPOutcome solve_lp(const LPProblem& p) {
  const std::size_t nv = p.num_vars;
  if (!p.objective.empty() && p.objective.size() != nv)
    throw DomainError("LP objective has " + std::to_string(p.objective.size()) + " entries, expected " +
                      std::to_string(nv));
  if (!p.kinds.empty() && p.kinds.size() != nv) throw DomainError("LP variable kinds size mismatch");
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != nv) throw DomainError("LP constraint width mismatch");

  // Structural columns: one per non-negative variable, two per free variable.
  std::vector<std::size_t> pos(nv), neg(nv, SIZE_MAX);
  std::size_t ns = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos[j] = ns++;
    if (p.kinds.empty() || p.kinds[j] == VarKind::free) neg[j] = ns++;
  }

  struct Row {
    std::vector<double> a;
    Relation rel;
    double b;
  };
  std::vector<Row> rows;
  for (const auto& c : p.constraints) {
    Row r{std::vector<double>(ns, 0.0), c.rel, c.rhs};
    double scale = std::abs(c.rhs);
    for (std::size_t j = 0; j < nv; ++j) {
      r.a[pos[j]] = c.coeffs[j];
      if (neg[j] != SIZE_MAX) r.a[neg[j]] = -c.coeffs[j];
      scale = std::max(scale, std::abs(c.coeffs[j]));
    }
    if (scale > 0) {
      for (auto& x : r.a) x /= scale;
      r.b /= scale;
    }
    if (r.b < 0) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      if (r.rel == Relation::le) r.rel = Relation::ge;
      else if (r.rel == Relation::ge) r.rel = Relation::le;
    }
    rows.push_back(std::move(r));
  }

  const std::size_t m = rows.size();
  std::size_t nslack = 0, nart = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::eq) ++nslack;
    if (r.rel != Relation::le) ++nart;
  }
  const std::size_t art0 = ns + nslack;
  const std::size_t cols = art0 + nart;
  Tableau tab(m, cols);
  std::size_t s = ns, a = art0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ns; ++j) tab.at(i, j) = rows[i].a[j];
    tab.rhs(i) = rows[i].b;
    switch (rows[i].rel) {
      case Relation::le:
        tab.at(i, s) = 1.0;
        tab.basis()[i] = s++;
        break;
      case Relation::ge:
        tab.at(i, s++) = -1.0;
        tab.at(i, a) = 1.0;
        tab.basis()[i] = a++;
        break;
      case Relation::eq:
        tab.at(i, a) = 1.0;
        tab.basis()[i] = a++;
        break;
    }
  }

  LPOutcome out;
  // Phase 1: minimize the sum of artificials, expressed in non-basic terms.
  if (nart > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art0) continue;
      for (std::size_t j = 0; j <= cols; ++j)
        if (j < art0 || j == cols) tab.at(m, j) -= tab.at(i, j);
    }
    tab.run(cols, out.pivots);
    if (-tab.rhs(tab.rows()) > kFeasTol) {
      out.status = LPStatus::infeasible;
      return out;
    }
    // Pivot remaining zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art0) {
        ++i;
        continue;
      }
      std::size_t c = art0;
      for (std::size_t j = 0; j < art0; ++j)
        if (std::abs(tab.at(i, j)) > kPivotTol) {
          c = j;
          break;
        }
      if (c < art0) {
        tab.pivot(i, c);
        ++i;
      } else {
        tab.remove_row(i);
      }
    }
    for (std::size_t j = 0; j <= cols; ++j) tab.at(tab.rows(), j) = 0.0;
    for (std::size_t i = 0; i < tab.rows(); ++i)
      for (std::size_t j = art0; j < cols; ++j) tab.at(i, j) = 0.0;
  }

  // Phase 2 objective as minimization.
  std::vector<double> c(cols, 0.0);
  if (!p.objective.empty()) {
    const double sign = p.sense == Sense::maximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv; ++j) {
      c[pos[j]] = sign * p.objective[j];
      if (neg[j] != SIZE_MAX) c[neg[j]] = -sign * p.objective[j];
    }
  }
  const std::size_t mr = tab.rows();
  for (std::size_t j = 0; j < cols; ++j) tab.at(mr, j) = c[j];
  tab.at(mr, cols) = 0.0;
  for (std::size_t i = 0; i < mr; ++i) {
    const double cb = c[tab.basis()[i]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= cols; ++j) tab.at(mr, j) -= cb * tab.at(i, j);
  }
  if (!tab.run(art0, out.pivots)) {
    out.status = LPStatus::unbounded;
    return out;
  }

  std::vector<double> z(cols, 0.0);
  for (std::size_t i = 0; i < mr; ++i) z[tab.basis()[i]] = tab.rhs(i);
  out.x.assign(nv, 0.0);
  for (std::size_t j = 0; j < nv; ++j) {
    out.x[j] = z[pos[j]];
    if (neg[j] != SIZE_MAX) out.x[j] -= z[neg[j]];
  }
  out.objective = 0.0;
  if (!p.objective.empty())
    for (std::size_t j = 0; j < nv; ++j) out.objective += p.objective[j] * out.x[j];
  out.status = LPStatus::optimal;
  return out;
}

}  // namespace eqdist

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace eqdist {

enum class Relation { le, eq, ge };
enum class Sense { maximize, minimize };
enum class VarKind { free, nonnegative };

struct LPConstraint {
  std::vector<double> coeffs;
  Relation rel = Relation::le;
  double rhs = 0.0;
};

struct LPProblem {
  std::size_t num_vars = 0;
  std::vector<double> objective;  // empty means pure feasibility
  Sense sense = Sense::maximize;
  std::vector<LPConstraint> constraints;
  std::vector<VarKind> kinds;  // empty means every variable is free

  LPProblem& add(std::vector<double> coeffs, Relation rel, double rhs) {
    constraints.push_back({std::move(coeffs), rel, rhs});
    return *this;
  }
};

enum class LPStatus { optimal, infeasible, unbounded };

std::string_view to_string(LPStatus s);

struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  std::vector<double> x;
  double objective = 0.0;
  int pivots = 0;
};

inline constexpr double kPivotTol = 1e-9;
inline constexpr double kFeasTol = 1e-7;

/// Dense two-phase simplex with Bland's rule. Free variables are split into
/// a difference of non-negative parts. Throws DomainError on dimension mismatch.
LPOutcome solve_lp(const LPProblem& p);

/// Largest violation of p's constraints at x (0 when feasible).
double max_violation(const LPProblem& p, const std::vector<double>& x);

}  // namespace eqdist

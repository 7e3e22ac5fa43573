#pragma once

#include <vector>

#include "tslab/rational.hpp"

namespace tslab {

enum class Rel { LE, EQ };

struct LinConstraint {
  std::vector<Rat> coeffs;
  Rel rel = Rel::LE;
  Rat rhs;
};

// Variables are free by default; bounds such as x >= 0 are ordinary
// constraints. The objective is maximized.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rat> objective;
  std::vector<LinConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;                 // meaningful when Optimal
  std::vector<Rat> witness;  // exact primal point when Optimal
};

// Exact two-phase simplex with Bland's rule; throws std::invalid_argument on
// dimension mismatches.
LpResult solve_lp(const LinearProgram& lp);

// Solves the explicit dual (min b.y s.t. A^T y = c, y_i >= 0 on <= rows,
// free on = rows) and verifies both witnesses and strong duality exactly.
struct LpDualResult {
  LpResult primal;
  std::vector<Rat> dual;
  bool verified = false;
};

LpDualResult solve_lp_with_dual(const LinearProgram& lp);

}  // namespace tslab

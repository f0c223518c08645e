#pragma once

// Exact simplex over rationals. Dense two-phase tableau with Bland's rule,
// so the solver terminates on degenerate systems without perturbation and
// never leaves exact arithmetic. Problem sizes here are tiny (tens of rows),
// so simplicity and auditability win over sparse cleverness.

#include "itg/rational.hpp"

#include <vector>

namespace itg {

enum class RowSense { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<Rat> coeffs;
  RowSense sense = RowSense::LessEq;
  Rat rhs;
};

// maximize objective . x  subject to the rows and x >= 0 componentwise.
struct LinearProgram {
  std::vector<Rat> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat value;               // objective value when Optimal
  std::vector<Rat> point;  // a vertex (basic feasible solution) when Optimal
};

LpSolution solve_lp(const LinearProgram& lp);

// Maximizes the objective, then breaks ties by minimizing x_0, then x_1, ...
// over the optimal face. The result is the unique lexicographically smallest
// optimizer, which makes downstream argmax reporting deterministic.
LpSolution solve_lp_lexmin(const LinearProgram& lp);

}  // namespace itg

#include "itg/lp.hpp"

#include "itg/game.hpp"

#include <algorithm>

namespace itg {

namespace {

// Dense tableau in basic-feasible form: a = B^{-1} A, b = B^{-1} rhs >= 0,
// basis[i] = column basic in row i.
struct Tableau {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> basis;
  // Kept explicit rather than read off a.front(): a program with no rows (or
  // whose rows were all pruned as redundant) still has to price its columns,
  // otherwise an unbounded objective would pass as optimal at the origin.
  int width = 0;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return width; }

  void pivot(int row, int col) {
    const Rat inv = Rat(1) / a[row][col];
    for (Rat& v : a[row]) v *= inv;
    b[row] *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat factor = a[i][col];
      for (int j = 0; j < cols(); ++j) a[i][j] -= factor * a[row][j];
      b[i] -= factor * b[row];
    }
    basis[row] = col;
  }

  Rat objective_value(const std::vector<Rat>& c) const {
    Rat v = 0;
    for (int i = 0; i < rows(); ++i) v += c[basis[i]] * b[i];
    return v;
  }

  // Reduced cost of column j for maximizing c: c_j - c_B . (B^{-1} A_j).
  Rat reduced_cost(const std::vector<Rat>& c, int j) const {
    Rat r = c[j];
    for (int i = 0; i < rows(); ++i)
      if (c[basis[i]] != 0) r -= c[basis[i]] * a[i][j];
    return r;
  }

  // Bland's rule: enter the lowest-index improving column, leave with the
  // lowest-index basic variable among ratio-test ties. Anti-cycling.
  LpStatus maximize(const std::vector<Rat>& c) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols(); ++j) {
        if (reduced_cost(c, j) > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LpStatus::Optimal;

      int leaving = -1;
      Rat best_ratio;
      for (int i = 0; i < rows(); ++i) {
        if (a[i][entering] <= 0) continue;
        const Rat ratio = b[i] / a[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return LpStatus::Unbounded;
      pivot(leaving, entering);
    }
  }
};

void verify_point(const LinearProgram& lp, const LpSolution& sol) {
  Rat value = 0;
  for (std::size_t j = 0; j < lp.objective.size(); ++j)
    value += lp.objective[j] * sol.point[j];
  if (value != sol.value)
    throw InternalError("simplex certificate failure: objective mismatch");
  for (const Rat& x : sol.point)
    if (x < 0) throw InternalError("simplex certificate failure: negative variable");
  for (const LpRow& row : lp.rows) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j)
      lhs += row.coeffs[j] * sol.point[j];
    const bool ok = row.sense == RowSense::LessEq      ? lhs <= row.rhs
                    : row.sense == RowSense::GreaterEq ? lhs >= row.rhs
                                                       : lhs == row.rhs;
    if (!ok) throw InternalError("simplex certificate failure: violated row");
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  for (const LpRow& row : lp.rows)
    if (static_cast<int>(row.coeffs.size()) != n)
      throw InternalError("LP row width does not match objective length");

  // Normalize to rhs >= 0, then count auxiliary columns.
  std::vector<LpRow> rows = lp.rows;
  for (LpRow& row : rows) {
    if (row.rhs < 0) {
      for (Rat& v : row.coeffs) v = -v;
      row.rhs = -row.rhs;
      if (row.sense == RowSense::LessEq) row.sense = RowSense::GreaterEq;
      else if (row.sense == RowSense::GreaterEq) row.sense = RowSense::LessEq;
    }
  }
  const int m = static_cast<int>(rows.size());
  int slacks = 0, artificials = 0;
  for (const LpRow& row : rows) {
    if (row.sense != RowSense::Equal) ++slacks;   // slack or surplus column
    if (row.sense != RowSense::LessEq) ++artificials;
  }

  const int total = n + slacks + artificials;
  Tableau t;
  t.a.assign(m, std::vector<Rat>(total, Rat(0)));
  t.b.resize(m);
  t.basis.resize(m);
  t.width = total;

  int next_slack = n, next_artificial = n + slacks;
  for (int i = 0; i < m; ++i) {
    std::copy(rows[i].coeffs.begin(), rows[i].coeffs.end(), t.a[i].begin());
    t.b[i] = rows[i].rhs;
    switch (rows[i].sense) {
      case RowSense::LessEq:
        t.a[i][next_slack] = 1;
        t.basis[i] = next_slack++;
        break;
      case RowSense::GreaterEq:
        t.a[i][next_slack++] = -1;
        t.a[i][next_artificial] = 1;
        t.basis[i] = next_artificial++;
        break;
      case RowSense::Equal:
        t.a[i][next_artificial] = 1;
        t.basis[i] = next_artificial++;
        break;
    }
  }

  if (artificials > 0) {
    // Phase 1: maximize -(sum of artificials); feasible iff optimum is 0.
    std::vector<Rat> c1(total, Rat(0));
    for (int j = n + slacks; j < total; ++j) c1[j] = -1;
    if (t.maximize(c1) != LpStatus::Optimal)
      throw InternalError("phase-1 simplex cannot be unbounded");
    if (t.objective_value(c1) != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive leftover zero-level artificials out of the basis; a row with no
    // usable pivot column is redundant and is dropped.
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis[i] < n + slacks) continue;
      int col = -1;
      for (int j = 0; j < n + slacks; ++j) {
        if (t.a[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        t.pivot(i, col);
      } else {
        t.a.erase(t.a.begin() + i);
        t.b.erase(t.b.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    // Artificial columns are the trailing block; truncate them away.
    for (auto& row : t.a) row.resize(n + slacks);
    t.width = n + slacks;
  }

  std::vector<Rat> c2(n + slacks, Rat(0));
  std::copy(lp.objective.begin(), lp.objective.end(), c2.begin());
  const LpStatus status = t.maximize(c2);
  if (status != LpStatus::Optimal) return {status, Rat(0), {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.point.assign(n, Rat(0));
  for (int i = 0; i < t.rows(); ++i)
    if (t.basis[i] < n) sol.point[t.basis[i]] = t.b[i];
  sol.value = t.objective_value(c2);
  verify_point(lp, sol);
  return sol;
}

LpSolution solve_lp_lexmin(const LinearProgram& lp) {
  LpSolution best = solve_lp(lp);
  if (best.status != LpStatus::Optimal) return best;

  const int n = static_cast<int>(lp.objective.size());
  LinearProgram pinned = lp;
  pinned.rows.push_back({lp.objective, RowSense::Equal, best.value});

  // Pin coordinates one at a time: minimize x_k over the current face, then
  // fix it. Each subproblem is bounded (x_k >= 0) and feasible by
  // construction, and the final point is the unique lex-min optimizer.
  for (int k = 0; k < n; ++k) {
    pinned.objective.assign(n, Rat(0));
    pinned.objective[k] = -1;
    LpSolution step = solve_lp(pinned);
    if (step.status != LpStatus::Optimal)
      throw InternalError("lexicographic refinement lost feasibility");
    std::vector<Rat> unit(n, Rat(0));
    unit[k] = 1;
    pinned.rows.push_back({std::move(unit), RowSense::Equal, step.point[k]});
    best.point = step.point;
  }
  // Re-verify against the original program before handing the point out.
  Rat value = 0;
  for (int j = 0; j < n; ++j) value += lp.objective[j] * best.point[j];
  if (value != best.value)
    throw InternalError("lexicographic refinement drifted off the optimum");
  return best;
}

}  // namespace itg

#include "itg/lp.hpp"

#include <doctest.h>

using namespace itg;

namespace {

LpRow row(std::vector<Rat> coeffs, RowSense sense, Rat rhs) {
  return LpRow{std::move(coeffs), sense, std::move(rhs)};
}

}  // namespace

TEST_CASE("box-constrained maximum lands on the corner") {
  LinearProgram lp;
  lp.objective = {Rat(1), Rat(1)};
  lp.rows.push_back(row({Rat(1), Rat(0)}, RowSense::LessEq, Rat(2)));
  lp.rows.push_back(row({Rat(0), Rat(1)}, RowSense::LessEq, Rat(3)));

  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(5));
  CHECK(sol.point == std::vector<Rat>{Rat(2), Rat(3)});
}

TEST_CASE("two-constraint polytope picks the right vertex") {
  LinearProgram lp;
  lp.objective = {Rat(3), Rat(2)};
  lp.rows.push_back(row({Rat(1), Rat(1)}, RowSense::LessEq, Rat(4)));
  lp.rows.push_back(row({Rat(1), Rat(3)}, RowSense::LessEq, Rat(6)));

  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(12));
  CHECK(sol.point == std::vector<Rat>{Rat(4), Rat(0)});
}

TEST_CASE("greater-equal and equality rows go through phase one") {
  LinearProgram lp;
  lp.objective = {Rat(-1)};
  lp.rows.push_back(row({Rat(1)}, RowSense::GreaterEq, Rat(2)));
  lp.rows.push_back(row({Rat(1)}, RowSense::LessEq, Rat(5)));

  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(-2));
  CHECK(sol.point == std::vector<Rat>{Rat(2)});

  LinearProgram eq;
  eq.objective = {Rat(1), Rat(2)};
  eq.rows.push_back(row({Rat(1), Rat(1)}, RowSense::Equal, Rat(1)));
  const LpSolution eq_sol = solve_lp(eq);
  REQUIRE(eq_sol.status == LpStatus::Optimal);
  CHECK(eq_sol.value == Rat(2));
  CHECK(eq_sol.point == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("contradictory bounds are reported infeasible") {
  LinearProgram lp;
  lp.objective = {Rat(1)};
  lp.rows.push_back(row({Rat(1)}, RowSense::LessEq, Rat(1)));
  lp.rows.push_back(row({Rat(1)}, RowSense::GreaterEq, Rat(2)));
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("missing upper bounds are reported unbounded") {
  LinearProgram lp;
  lp.objective = {Rat(1), Rat(0)};
  lp.rows.push_back(row({Rat(0), Rat(1)}, RowSense::LessEq, Rat(1)));
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);

  LinearProgram free;
  free.objective = {Rat(1)};
  CHECK(solve_lp(free).status == LpStatus::Unbounded);
}

TEST_CASE("degenerate vertex with redundant tight rows still solves") {
  LinearProgram lp;
  lp.objective = {Rat(1), Rat(1)};
  lp.rows.push_back(row({Rat(1), Rat(0)}, RowSense::LessEq, Rat(1)));
  lp.rows.push_back(row({Rat(0), Rat(1)}, RowSense::LessEq, Rat(1)));
  lp.rows.push_back(row({Rat(1), Rat(1)}, RowSense::LessEq, Rat(2)));

  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(2));
  CHECK(sol.point == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("the classic cycling instance terminates at its optimum") {
  // Beale's example: naive largest-coefficient pivoting cycles forever here;
  // Bland's rule must reach the optimum 1/20 at (1/25, 0, 1, 0).
  LinearProgram lp;
  lp.objective = {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)};
  lp.rows.push_back(
      row({Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)}, RowSense::LessEq, Rat(0)));
  lp.rows.push_back(
      row({Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)}, RowSense::LessEq, Rat(0)));
  lp.rows.push_back(
      row({Rat(0), Rat(0), Rat(1), Rat(0)}, RowSense::LessEq, Rat(1)));

  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(1, 20));
  CHECK(sol.point == std::vector<Rat>{Rat(1, 25), Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("lexmin tie-break returns the smallest optimizer") {
  LinearProgram lp;
  lp.objective = {Rat(1), Rat(1)};
  lp.rows.push_back(row({Rat(1), Rat(1)}, RowSense::LessEq, Rat(1)));

  const LpSolution sol = solve_lp_lexmin(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(1));
  CHECK(sol.point == std::vector<Rat>{Rat(0), Rat(1)});

  LinearProgram cube;
  cube.objective = {Rat(1), Rat(1), Rat(1)};
  cube.rows.push_back(row({Rat(1), Rat(1), Rat(1)}, RowSense::LessEq, Rat(1)));
  const LpSolution cube_sol = solve_lp_lexmin(cube);
  REQUIRE(cube_sol.status == LpStatus::Optimal);
  CHECK(cube_sol.point == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("lexmin is stable under constraint reordering") {
  LinearProgram lp;
  lp.objective = {Rat(2), Rat(2), Rat(1)};
  lp.rows.push_back(row({Rat(1), Rat(1), Rat(0)}, RowSense::LessEq, Rat(3)));
  lp.rows.push_back(row({Rat(0), Rat(1), Rat(1)}, RowSense::LessEq, Rat(2)));
  lp.rows.push_back(row({Rat(1), Rat(0), Rat(1)}, RowSense::LessEq, Rat(4)));

  LinearProgram permuted = lp;
  std::swap(permuted.rows[0], permuted.rows[2]);
  std::swap(permuted.rows[0], permuted.rows[1]);

  const LpSolution a = solve_lp_lexmin(lp);
  const LpSolution b = solve_lp_lexmin(permuted);
  REQUIRE(a.status == LpStatus::Optimal);
  REQUIRE(b.status == LpStatus::Optimal);
  CHECK(a.value == b.value);
  CHECK(a.point == b.point);
}

TEST_CASE("zero objective is optimal at any feasible point") {
  LinearProgram lp;
  lp.objective = {Rat(0), Rat(0)};
  lp.rows.push_back(row({Rat(1), Rat(1)}, RowSense::Equal, Rat(1)));
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rat(0));
  CHECK(sol.point[0] + sol.point[1] == Rat(1));
}

#include "itg/binary.hpp"

#include "itg/hull.hpp"
#include "itg/lp.hpp"
#include "itg/oracle.hpp"

#include <array>

namespace itg {

const char* to_string(BinaryCase kind) {
  switch (kind) {
    case BinaryCase::Aligned: return "aligned";
    case BinaryCase::OnlyConstantZero: return "only_constant_zero";
    case BinaryCase::OnlyConstantOne: return "only_constant_one";
    case BinaryCase::DiagonalOnly: return "diagonal_only";
  }
  return "unknown";
}

namespace {

void require_binary(const Game& game) {
  validate_game(game);
  if (game.num_actions() != 2)
    throw ValidationError(ValidationCode::NotBinary,
                          "analysis needs exactly 2 actions, game has " +
                              std::to_string(game.num_actions()));
}

}  // namespace

BinaryPartition partition_types(const Game& game) {
  require_binary(game);
  BinaryPartition part;
  for (int t = 0; t < game.num_types(); ++t) {
    const Rat sender_edge = game.sender_utility[t][0] - game.sender_utility[t][1];
    const Rat receiver_edge =
        game.receiver_utility[t][0] - game.receiver_utility[t][1];
    // Sender-indifferent types follow the receiver; a doubly indifferent type
    // lands in cell one, where it can only relax the pooled constraint.
    const bool to_zero =
        sender_edge > 0 || (sender_edge == 0 && receiver_edge > 0);
    (to_zero ? part.cell_zero : part.cell_one).push_back(t);
  }
  return part;
}

BinaryCoefficients binary_coefficients(const Game& game,
                                       const BinaryPartition& partition) {
  require_binary(game);
  BinaryCoefficients c{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
  for (int t : partition.cell_zero) {
    c.a00 += game.prior[t] * game.receiver_utility[t][0];
    c.a10 += game.prior[t] * game.receiver_utility[t][1];
  }
  for (int t : partition.cell_one) {
    c.a01 += game.prior[t] * game.receiver_utility[t][0];
    c.a11 += game.prior[t] * game.receiver_utility[t][1];
  }
  c.b0 = c.a00 - c.a10;
  c.b1 = c.a01 - c.a11;
  return c;
}

bool feasible_binary(const BinaryCoefficients& c, const Rat& p0,
                     const Rat& p1) {
  if (p1 < 0 || p0 < p1 || p0 > 1) return false;
  const Rat pooled = p0 * c.b0 + p1 * c.b1;
  if (pooled < 0) return false;
  return pooled >= c.b0 + c.b1;
}

bool feasible_binary(const Game& game, const Rat& p0, const Rat& p1) {
  return feasible_binary(binary_coefficients(game, partition_types(game)), p0,
                         p1);
}

Outcome binary_outcome(const Game& game, const Rat& p0, const Rat& p1) {
  const BinaryPartition part = partition_types(game);
  Outcome out;
  out.p.assign(game.num_types(), {Rat(0), Rat(0)});
  for (int t : part.cell_zero) out.p[t] = {p0, 1 - p0};
  for (int t : part.cell_one) out.p[t] = {p1, 1 - p1};
  return out;
}

namespace {

std::vector<RatPoint> region_vertices(const BinaryCoefficients& c) {
  // Halfplanes a*p0 + b*p1 >= rhs; the feasible region is their
  // intersection, so its vertices sit on pairs of boundary lines.
  struct Halfplane {
    Rat a, b, rhs;
  };
  const Rat pooled_rhs = c.b0 + c.b1 > 0 ? c.b0 + c.b1 : Rat(0);
  const std::array<Halfplane, 6> planes = {{
      {Rat(1), Rat(0), Rat(0)},    // p0 >= 0
      {Rat(-1), Rat(0), Rat(-1)},  // p0 <= 1
      {Rat(0), Rat(1), Rat(0)},    // p1 >= 0
      {Rat(0), Rat(-1), Rat(-1)},  // p1 <= 1
      {Rat(1), Rat(-1), Rat(0)},   // p0 >= p1
      {c.b0, c.b1, pooled_rhs},    // pooled obedience
  }};

  std::vector<RatPoint> candidates;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      const Rat det = planes[i].a * planes[j].b - planes[j].a * planes[i].b;
      if (det == 0) continue;
      RatPoint p{(planes[i].rhs * planes[j].b - planes[j].rhs * planes[i].b) / det,
                 (planes[i].a * planes[j].rhs - planes[j].a * planes[i].rhs) / det};
      bool inside = true;
      for (const Halfplane& h : planes)
        if (h.a * p.first + h.b * p.second < h.rhs) {
          inside = false;
          break;
        }
      if (inside) candidates.push_back(std::move(p));
    }
  return convex_hull(std::move(candidates));
}

// Welfare-best point per case; welfare is needed only on the diagonal, where
// the segment endpoint is picked by a one-variable exact LP.
RatPoint optimal_point(const Game& game, const BinaryCase kind,
                       const Welfare& welfare) {
  switch (kind) {
    case BinaryCase::Aligned: return {Rat(1), Rat(0)};
    case BinaryCase::OnlyConstantZero: return {Rat(0), Rat(0)};
    case BinaryCase::OnlyConstantOne: return {Rat(1), Rat(1)};
    case BinaryCase::DiagonalOnly: break;
  }
  Rat slope = 0;  // d/dp of E[w] along the diagonal outcome (p, p)
  for (int t = 0; t < game.num_types(); ++t)
    slope += game.prior[t] * (welfare.table[t][0] - welfare.table[t][1]);
  LinearProgram lp;
  lp.objective = {slope};
  lp.rows.push_back({{Rat(1)}, RowSense::LessEq, Rat(1)});
  const LpSolution sol = solve_lp_lexmin(lp);
  if (sol.status != LpStatus::Optimal)
    throw InternalError("diagonal segment optimization cannot fail");
  return {sol.point[0], sol.point[0]};
}

}  // namespace

BinaryAnalysis classify(const Game& game) {
  BinaryAnalysis analysis;
  analysis.partition = partition_types(game);
  analysis.coeffs = binary_coefficients(game, analysis.partition);
  const Rat& b0 = analysis.coeffs.b0;
  const Rat& b1 = analysis.coeffs.b1;
  if (b0 >= 0 && b1 <= 0) analysis.kind = BinaryCase::Aligned;
  else if (b0 + b1 > 0) analysis.kind = BinaryCase::OnlyConstantOne;
  else if (b0 + b1 < 0) analysis.kind = BinaryCase::OnlyConstantZero;
  else analysis.kind = BinaryCase::DiagonalOnly;
  analysis.region_vertices = region_vertices(analysis.coeffs);
  analysis.optimal = optimal_point(game, analysis.kind, welfare_sum(game));
  return analysis;
}

BinaryOptimum optimal_binary_outcome(const Game& game, const Welfare& welfare) {
  require_binary(game);
  const MonotonicityReport mono = check_monotone(game, welfare);
  if (!mono.monotone)
    throw ValidationError(
        ValidationCode::NotMonotone,
        "welfare drops from (" + game.type_labels[mono.preferred_type] + ", " +
            game.action_labels[mono.preferred_action] + ") to (" +
            game.type_labels[mono.other_type] + ", " +
            game.action_labels[mono.other_action] +
            ") although both utilities weakly dominate at the former");

  const BinaryAnalysis analysis = classify(game);
  const RatPoint point = optimal_point(game, analysis.kind, welfare);

  BinaryOptimum opt;
  opt.p0 = point.first;
  opt.p1 = point.second;
  opt.outcome = binary_outcome(game, opt.p0, opt.p1);
  opt.value = expected_welfare(game, opt.outcome, welfare);
  return opt;
}

CheapTalkValue cheaptalk_max_binary(const Game& game, const Welfare& welfare) {
  require_binary(game);
  validate_welfare(game, welfare);
  if (check_monotone(game, welfare).monotone)
    return {optimal_binary_outcome(game, welfare).value,
            CheapTalkMethod::Exact};

  // Non-monotone welfare: the closed form does not apply, so fall back to
  // the enumeration oracle. The best enumerated equilibrium is a certified
  // lower bound (welfare is linear, so convexification cannot beat members).
  const EquilibriumSet set =
      enumerate_equilibria(game, game.num_types() + 1, welfare);
  if (set.members.empty())
    throw InternalError("the babbling equilibrium must always be enumerated");
  Rat best = *set.members.front().welfare;
  for (const EquilibriumRecord& m : set.members)
    if (*m.welfare > best) best = *m.welfare;
  return {best, CheapTalkMethod::LowerBound};
}

Json binary_analysis_to_json(const Game& game, const BinaryAnalysis& analysis) {
  Json j;
  Json cells;
  Json zero = Json::array(), one = Json::array();
  for (int t : analysis.partition.cell_zero) zero.push_back(game.type_labels[t]);
  for (int t : analysis.partition.cell_one) one.push_back(game.type_labels[t]);
  cells["cell_zero"] = std::move(zero);
  cells["cell_one"] = std::move(one);
  j["partition"] = std::move(cells);
  j["coefficients"] = Json{{"a00", rational_to_json(analysis.coeffs.a00)},
                           {"a01", rational_to_json(analysis.coeffs.a01)},
                           {"a10", rational_to_json(analysis.coeffs.a10)},
                           {"a11", rational_to_json(analysis.coeffs.a11)},
                           {"b0", rational_to_json(analysis.coeffs.b0)},
                           {"b1", rational_to_json(analysis.coeffs.b1)}};
  j["case"] = to_string(analysis.kind);
  Json vertices = Json::array();
  for (const RatPoint& v : analysis.region_vertices)
    vertices.push_back(
        {rational_to_json(v.first), rational_to_json(v.second)});
  j["region_vertices"] = std::move(vertices);
  j["optimal"] = Json::array({rational_to_json(analysis.optimal.first),
                              rational_to_json(analysis.optimal.second)});
  return j;
}

}  // namespace itg

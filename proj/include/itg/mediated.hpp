#pragma once

// Mediated (communication) equilibria in canonical form: the mediator hears a
// reported type, samples an action from the outcome table, and the receiver
// obeys. The equilibrium set is the polytope cut out by truthfulness rows
// (one per ordered type pair), obedience rows (one per ordered action pair),
// and row-stochasticity. Welfare maximization over it is an exact LP.

#include "itg/game.hpp"
#include "itg/json_io.hpp"
#include "itg/lp.hpp"

#include <string>
#include <vector>

namespace itg {

enum class ConstraintKind { Truthfulness, Obedience, Stochasticity };

struct Constraint {
  ConstraintKind kind = ConstraintKind::Stochasticity;
  // Truthfulness: reporting type `from` rather than lying to `to`.
  // Obedience: following recommendation `from` rather than deviating to `to`.
  // Stochasticity: row `from` sums to one (`to` unused).
  int from = -1;
  int to = -1;
  std::vector<Rat> coeffs;  // over outcome entries, row-major [type][action]
  RowSense sense = RowSense::Equal;
  Rat rhs;
  std::string label;
};

struct ConstraintSystem {
  int num_types = 0;
  int num_actions = 0;
  // Truthfulness block, then obedience, then stochasticity, each in index
  // order. Downstream code relies only on kind/label, not on position.
  std::vector<Constraint> constraints;
};

ConstraintSystem build_constraints(const Game& game);

struct SlackEntry {
  std::string label;
  Rat slack;
};

// Slack of every incentive row at a given outcome. Stochasticity is part of
// outcome validity, not of the certificate.
struct EquilibriumCertificate {
  bool equilibrium = true;
  std::vector<SlackEntry> slacks;
  std::vector<std::string> violated;  // labels of rows with negative slack
};

EquilibriumCertificate check_equilibrium(const Game& game,
                                         const Outcome& outcome);

struct WelfareOptimum {
  Rat value;
  Outcome argmax;  // lexicographically smallest optimizer (deterministic)
  EquilibriumCertificate certificate;  // re-checked; always passing
};

// max E[w] over the equilibrium polytope. The polytope always contains the
// receiver's best constant action, so the LP is feasible and bounded.
WelfareOptimum maximize_welfare(const Game& game, const Welfare& welfare);

Json certificate_to_json(const EquilibriumCertificate& cert);
Json constraints_to_json(const ConstraintSystem& system);

}  // namespace itg

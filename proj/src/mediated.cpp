#include "itg/mediated.hpp"

namespace itg {

ConstraintSystem build_constraints(const Game& game) {
  validate_game(game);
  const int nt = game.num_types(), na = game.num_actions();
  const int vars = nt * na;
  const auto cell = [na](int t, int a) { return t * na + a; };

  ConstraintSystem system{nt, na, {}};

  // Truthful reporting: type `t` must not gain by reporting `lie`.
  for (int t = 0; t < nt; ++t)
    for (int lie = 0; lie < nt; ++lie) {
      if (lie == t) continue;
      Constraint c;
      c.kind = ConstraintKind::Truthfulness;
      c.from = t;
      c.to = lie;
      c.coeffs.assign(vars, Rat(0));
      for (int a = 0; a < na; ++a) {
        c.coeffs[cell(t, a)] += game.sender_utility[t][a];
        c.coeffs[cell(lie, a)] -= game.sender_utility[t][a];
      }
      c.sense = RowSense::GreaterEq;
      c.rhs = 0;
      c.label = "truthfulness(" + game.type_labels[t] + "->" +
                game.type_labels[lie] + ")";
      system.constraints.push_back(std::move(c));
    }

  // Obedient play: a receiver told `a` must not gain by playing `dev`,
  // given the posterior the recommendation induces.
  for (int a = 0; a < na; ++a)
    for (int dev = 0; dev < na; ++dev) {
      if (dev == a) continue;
      Constraint c;
      c.kind = ConstraintKind::Obedience;
      c.from = a;
      c.to = dev;
      c.coeffs.assign(vars, Rat(0));
      for (int t = 0; t < nt; ++t)
        c.coeffs[cell(t, a)] =
            game.prior[t] *
            (game.receiver_utility[t][a] - game.receiver_utility[t][dev]);
      c.sense = RowSense::GreaterEq;
      c.rhs = 0;
      c.label = "obedience(" + game.action_labels[a] + "->" +
                game.action_labels[dev] + ")";
      system.constraints.push_back(std::move(c));
    }

  for (int t = 0; t < nt; ++t) {
    Constraint c;
    c.kind = ConstraintKind::Stochasticity;
    c.from = t;
    c.coeffs.assign(vars, Rat(0));
    for (int a = 0; a < na; ++a) c.coeffs[cell(t, a)] = 1;
    c.sense = RowSense::Equal;
    c.rhs = 1;
    c.label = "stochasticity(" + game.type_labels[t] + ")";
    system.constraints.push_back(std::move(c));
  }
  return system;
}

EquilibriumCertificate check_equilibrium(const Game& game,
                                         const Outcome& outcome) {
  validate_outcome(game, outcome);
  const ConstraintSystem system = build_constraints(game);
  const int na = game.num_actions();

  EquilibriumCertificate cert;
  for (const Constraint& c : system.constraints) {
    if (c.kind == ConstraintKind::Stochasticity) continue;
    Rat slack = -c.rhs;
    for (int t = 0; t < game.num_types(); ++t)
      for (int a = 0; a < na; ++a)
        slack += c.coeffs[t * na + a] * outcome.p[t][a];
    if (slack < 0) {
      cert.equilibrium = false;
      cert.violated.push_back(c.label);
    }
    cert.slacks.push_back({c.label, std::move(slack)});
  }
  return cert;
}

WelfareOptimum maximize_welfare(const Game& game, const Welfare& welfare) {
  validate_welfare(game, welfare);
  const ConstraintSystem system = build_constraints(game);
  const int nt = game.num_types(), na = game.num_actions();

  LinearProgram lp;
  lp.objective.resize(nt * na);
  for (int t = 0; t < nt; ++t)
    for (int a = 0; a < na; ++a)
      lp.objective[t * na + a] = game.prior[t] * welfare.table[t][a];
  for (const Constraint& c : system.constraints)
    lp.rows.push_back({c.coeffs, c.sense, c.rhs});

  const LpSolution sol = solve_lp_lexmin(lp);
  if (sol.status != LpStatus::Optimal)
    throw InternalError(
        "equilibrium polytope must be nonempty and bounded, but the solver "
        "disagreed");

  WelfareOptimum opt;
  opt.value = sol.value;
  opt.argmax.p.assign(nt, std::vector<Rat>(na));
  for (int t = 0; t < nt; ++t)
    for (int a = 0; a < na; ++a) opt.argmax.p[t][a] = sol.point[t * na + a];
  opt.certificate = check_equilibrium(game, opt.argmax);
  if (!opt.certificate.equilibrium)
    throw InternalError("welfare optimizer failed its own certificate");
  return opt;
}

Json certificate_to_json(const EquilibriumCertificate& cert) {
  Json j;
  j["equilibrium"] = cert.equilibrium;
  Json slacks = Json::array();
  for (const SlackEntry& s : cert.slacks)
    slacks.push_back({{"label", s.label}, {"slack", rational_to_json(s.slack)}});
  j["slacks"] = std::move(slacks);
  j["violated"] = cert.violated;
  return j;
}

Json constraints_to_json(const ConstraintSystem& system) {
  static const char* kind_names[] = {"truthfulness", "obedience",
                                     "stochasticity"};
  Json rows = Json::array();
  for (const Constraint& c : system.constraints)
    rows.push_back({{"kind", kind_names[static_cast<int>(c.kind)]},
                    {"label", c.label},
                    {"coeffs", rational_row_to_json(c.coeffs)},
                    {"sense", c.sense == RowSense::Equal ? "eq" : "ge"},
                    {"rhs", rational_to_json(c.rhs)}});
  Json j;
  j["num_types"] = system.num_types;
  j["num_actions"] = system.num_actions;
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace itg

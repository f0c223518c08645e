#include "itg/game.hpp"

namespace itg {

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::NonStochasticPrior: return "NonStochasticPrior";
    case ValidationCode::ZeroProbabilityType: return "ZeroProbabilityType";
    case ValidationCode::DimensionMismatch: return "DimensionMismatch";
    case ValidationCode::NegativeWelfare: return "NegativeWelfare";
    case ValidationCode::NotBinary: return "NotBinary";
    case ValidationCode::NotMonotone: return "NotMonotone";
    case ValidationCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ValidationCode::NonUniformPrior: return "NonUniformPrior";
    case ValidationCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

void check_table(const Game& game, const std::vector<std::vector<Rat>>& table,
                 const std::string& name) {
  if (static_cast<int>(table.size()) != game.num_types())
    throw ValidationError(ValidationCode::DimensionMismatch,
                          name + " has " + std::to_string(table.size()) +
                              " rows, expected one per type (" +
                              std::to_string(game.num_types()) + ")");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != game.num_actions())
      throw ValidationError(ValidationCode::DimensionMismatch,
                            name + " row has " + std::to_string(row.size()) +
                                " columns, expected one per action (" +
                                std::to_string(game.num_actions()) + ")");
}

}  // namespace

void validate_game(const Game& game) {
  if (game.num_types() == 0)
    throw ValidationError(ValidationCode::DimensionMismatch, "no types");
  if (game.num_actions() == 0)
    throw ValidationError(ValidationCode::DimensionMismatch, "no actions");
  if (game.type_labels.size() != game.prior.size())
    throw ValidationError(ValidationCode::DimensionMismatch,
                          "type label count does not match prior length");
  check_table(game, game.sender_utility, "sender utility");
  check_table(game, game.receiver_utility, "receiver utility");

  Rat total = 0;
  for (int t = 0; t < game.num_types(); ++t) {
    if (game.prior[t] < 0)
      throw ValidationError(ValidationCode::NonStochasticPrior,
                            "prior(" + game.type_labels[t] +
                                ") = " + format_rational(game.prior[t]) +
                                " is negative");
    if (game.prior[t] == 0)
      throw ValidationError(ValidationCode::ZeroProbabilityType,
                            "prior(" + game.type_labels[t] +
                                ") is zero; every type must have positive "
                                "probability");
    total += game.prior[t];
  }
  if (total != 1)
    throw ValidationError(ValidationCode::NonStochasticPrior,
                          "prior sums to " + format_rational(total));
}

void validate_outcome(const Game& game, const Outcome& outcome) {
  check_table(game, outcome.p, "outcome");
  for (int t = 0; t < game.num_types(); ++t) {
    Rat row = 0;
    for (const Rat& v : outcome.p[t]) {
      if (v < 0)
        throw ValidationError(ValidationCode::NonStochasticPrior,
                              "negative outcome entry in row " +
                                  game.type_labels[t]);
      row += v;
    }
    if (row != 1)
      throw ValidationError(ValidationCode::NonStochasticPrior,
                            "outcome row " + game.type_labels[t] + " sums to " +
                                format_rational(row));
  }
}

void validate_welfare(const Game& game, const Welfare& welfare) {
  check_table(game, welfare.table, "welfare");
  for (int t = 0; t < game.num_types(); ++t)
    for (int a = 0; a < game.num_actions(); ++a)
      if (welfare.table[t][a] < 0)
        throw ValidationError(
            ValidationCode::NegativeWelfare,
            "welfare(" + game.type_labels[t] + ", " + game.action_labels[a] +
                ") = " + format_rational(welfare.table[t][a]));
}

namespace {

Rat expectation(const Game& game, const Outcome& outcome,
                const std::vector<std::vector<Rat>>& payoff) {
  Rat total = 0;
  for (int t = 0; t < game.num_types(); ++t)
    for (int a = 0; a < game.num_actions(); ++a)
      total += game.prior[t] * outcome.p[t][a] * payoff[t][a];
  return total;
}

}  // namespace

Rat expected_utility(const Game& game, const Outcome& outcome, Player player) {
  validate_outcome(game, outcome);
  return expectation(game, outcome,
                     player == Player::Sender ? game.sender_utility
                                              : game.receiver_utility);
}

Rat expected_welfare(const Game& game, const Outcome& outcome,
                     const Welfare& welfare) {
  validate_outcome(game, outcome);
  validate_welfare(game, welfare);
  return expectation(game, outcome, welfare.table);
}

MonotonicityReport check_monotone(const Game& game, const Welfare& welfare) {
  validate_welfare(game, welfare);
  for (int t = 0; t < game.num_types(); ++t)
    for (int a = 0; a < game.num_actions(); ++a)
      for (int t2 = 0; t2 < game.num_types(); ++t2)
        for (int b = 0; b < game.num_actions(); ++b) {
          if (t == t2 && a == b) continue;
          const bool dominates =
              game.sender_utility[t][a] >= game.sender_utility[t2][b] &&
              game.receiver_utility[t][a] >= game.receiver_utility[t2][b];
          if (dominates && welfare.table[t][a] < welfare.table[t2][b])
            return {false, t, a, t2, b};
        }
  return {};
}

namespace {

Welfare derived_welfare(const Game& game, std::vector<std::vector<Rat>> table,
                        const std::string& source) {
  Welfare w{std::move(table), source};
  validate_welfare(game, w);
  return w;
}

}  // namespace

Welfare welfare_from_sender(const Game& game) {
  return derived_welfare(game, game.sender_utility, "us");
}

Welfare welfare_from_receiver(const Game& game) {
  return derived_welfare(game, game.receiver_utility, "ur");
}

Welfare welfare_sum(const Game& game) {
  auto table = game.sender_utility;
  for (int t = 0; t < game.num_types(); ++t)
    for (int a = 0; a < game.num_actions(); ++a)
      table[t][a] += game.receiver_utility[t][a];
  return derived_welfare(game, std::move(table), "sum");
}

}  // namespace itg

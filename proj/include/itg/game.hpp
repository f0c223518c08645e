#pragma once

// Core model: a finite sender/receiver transmission game, welfare functions
// over (type, action) pairs, and outcome tables (conditional action
// distributions). Everything downstream consumes these types.

#include "itg/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace itg {

enum class ValidationCode {
  NonStochasticPrior,
  ZeroProbabilityType,
  DimensionMismatch,
  NegativeWelfare,
  NotBinary,
  NotMonotone,
  AlphabetTooLarge,
  NonUniformPrior,
  MalformedInput,
};

const char* to_string(ValidationCode code);

// Rejected input. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  ValidationError(ValidationCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}
  ValidationCode code() const { return code_; }

private:
  ValidationCode code_;
};

// Broken internal invariant (solver certificate failure, sampler support
// violation). Never caused by user input; CLI maps this to exit code 3.
class InternalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Game {
  std::vector<std::string> type_labels;
  std::vector<std::string> action_labels;
  std::vector<Rat> prior;                          // one entry per type
  std::vector<std::vector<Rat>> sender_utility;    // [type][action]
  std::vector<std::vector<Rat>> receiver_utility;  // [type][action]

  int num_types() const { return static_cast<int>(prior.size()); }
  int num_actions() const { return static_cast<int>(action_labels.size()); }
};

// Nonnegative welfare table over (type, action). `source` records where the
// table came from ("file", "us", "ur", "sum") for report provenance.
struct Welfare {
  std::vector<std::vector<Rat>> table;  // [type][action]
  std::string source = "file";
};

// Conditional distribution over actions per type: p[t][a] = P(action a | type t).
struct Outcome {
  std::vector<std::vector<Rat>> p;
};

// Throws ValidationError on the first violated requirement: matching
// dimensions, prior summing to 1 with every entry strictly positive.
void validate_game(const Game& game);

// Dimensions match the game, rows are stochastic (nonnegative, sum to 1).
void validate_outcome(const Game& game, const Outcome& outcome);

// Dimensions match the game, every entry nonnegative.
void validate_welfare(const Game& game, const Welfare& welfare);

enum class Player { Sender, Receiver };

// E[u_player] under the prior and the outcome table. Exact.
Rat expected_utility(const Game& game, const Outcome& outcome, Player player);

// E[w] under the prior and the outcome table. Exact.
Rat expected_welfare(const Game& game, const Outcome& outcome,
                     const Welfare& welfare);

// Welfare is monotone when it respects the componentwise order on utility
// pairs: whenever both players' utilities at cell (type, action) weakly
// dominate those at another cell, welfare must not be smaller there. On
// failure the report names the first witness in index order: both utilities
// at the `preferred_*` cell weakly dominate the `other_*` cell, yet welfare
// is strictly larger at the dominated cell.
struct MonotonicityReport {
  bool monotone = true;
  int preferred_type = -1;
  int preferred_action = -1;
  int other_type = -1;
  int other_action = -1;
};

MonotonicityReport check_monotone(const Game& game, const Welfare& welfare);

// Derived welfare tables. Each validates nonnegativity before returning.
Welfare welfare_from_sender(const Game& game);
Welfare welfare_from_receiver(const Game& game);
Welfare welfare_sum(const Game& game);

}  // namespace itg

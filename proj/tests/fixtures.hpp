#pragma once

// Shared test fixtures: the two bundled example games, their welfare tables
// and reference outcomes, plus seeded random generators for property suites.
// Everything is exact and deterministic; random fixtures derive from
// SplitMix64 so reruns see identical games.

#include "itg/game.hpp"
#include "itg/oracle.hpp"
#include "itg/simulate.hpp"

#include <string>
#include <vector>

namespace fixtures {

using itg::Game;
using itg::OneRoundProtocol;
using itg::Outcome;
using itg::Rat;
using itg::SplitMix64;
using itg::Welfare;

inline std::vector<std::string> index_labels(const char* prefix, int count) {
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

// Two types, two actions, uniform prior. The sender wants the action that
// matches its type; the receiver agrees on t0 but only mildly prefers the
// match on t1. Aligned case; full revelation is an equilibrium.
inline Game two_type_binary() {
  Game g;
  g.type_labels = {"t0", "t1"};
  g.action_labels = {"0", "1"};
  g.prior = {Rat(1, 2), Rat(1, 2)};
  g.sender_utility = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  g.receiver_utility = {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1)}};
  return g;
}

// The bundled welfare for the binary example: pays only on the (t0, action 1)
// cell, which both players rank below (t0, action 0) -- not monotone.
inline Welfare binary_example_welfare() {
  return Welfare{{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}, "file"};
}

// Welfare-optimal mediated outcome of the binary example.
inline Outcome binary_example_optimum() {
  return Outcome{{{Rat(1, 2), Rat(1, 2)}, {Rat(0), Rat(1)}}};
}

// Three types, three actions, uniform prior. The sender wants the action
// matching its type; the receiver wants the next action around the cycle.
inline Game cyclic_shift() {
  Game g;
  g.type_labels = {"t0", "t1", "t2"};
  g.action_labels = {"0", "1", "2"};
  g.prior = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  g.sender_utility = {{Rat(1), Rat(0), Rat(0)},
                      {Rat(0), Rat(1), Rat(0)},
                      {Rat(0), Rat(0), Rat(1)}};
  g.receiver_utility = {{Rat(0), Rat(1), Rat(0)},
                        {Rat(0), Rat(0), Rat(1)},
                        {Rat(1), Rat(0), Rat(0)}};
  return g;
}

// Mediated equilibrium of the cyclic game pairing each type with its own and
// the receiver-preferred action, half-and-half. Both utilities are 1/2.
inline Outcome cyclic_pairing() {
  return Outcome{{{Rat(1, 2), Rat(1, 2), Rat(0)},
                  {Rat(0), Rat(1, 2), Rat(1, 2)},
                  {Rat(1, 2), Rat(0), Rat(1, 2)}}};
}

// ---- seeded random fixtures -----------------------------------------------

// Uniform integer in [lo, hi] from the generator's next word. Ranges here are
// tiny, so modulo bias is irrelevant for test-case generation.
inline int pick(SplitMix64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Nonnegative rational with numerator in [0, max_num] and denominator in
// [1, max_den]; coarse enough to make ties and degeneracies common.
inline Rat pick_rational(SplitMix64& rng, int max_num = 6, int max_den = 6) {
  return Rat(pick(rng, 0, max_num), pick(rng, 1, max_den));
}

inline std::vector<Rat> random_prior(SplitMix64& rng, int types) {
  std::vector<Rat> prior(types);
  Rat total = 0;
  for (Rat& q : prior) {
    q = Rat(pick(rng, 1, 6));
    total += q;
  }
  for (Rat& q : prior) q /= total;
  return prior;
}

// Random binary-action game with nonnegative utilities (denominators <= 6).
inline Game random_binary_game(SplitMix64& rng, int max_types = 4) {
  const int types = pick(rng, 1, max_types);
  Game g;
  g.type_labels = index_labels("t", types);
  g.action_labels = {"0", "1"};
  g.prior = random_prior(rng, types);
  g.sender_utility.resize(types);
  g.receiver_utility.resize(types);
  for (int t = 0; t < types; ++t) {
    g.sender_utility[t] = {pick_rational(rng), pick_rational(rng)};
    g.receiver_utility[t] = {pick_rational(rng), pick_rational(rng)};
  }
  return g;
}

// Random binary game with strict sender preferences everywhere and at least
// one type leaning each way, so the (p0, p1) parametrization of two-value
// outcomes has no phantom coordinate.
inline Game random_strict_binary_game(SplitMix64& rng, int max_types = 4) {
  for (;;) {
    Game g = random_binary_game(rng, max_types);
    bool strict = true;
    bool lean_zero = false, lean_one = false;
    for (int t = 0; t < g.num_types(); ++t) {
      if (g.sender_utility[t][0] == g.sender_utility[t][1]) strict = false;
      (g.sender_utility[t][0] > g.sender_utility[t][1] ? lean_zero : lean_one) =
          true;
    }
    if (strict && lean_zero && lean_one) return g;
  }
}

// Random small game of any shape (used by oracle/simulator properties).
inline Game random_game(SplitMix64& rng, int max_types = 3, int max_actions = 3) {
  const int types = pick(rng, 1, max_types);
  const int actions = pick(rng, 1, max_actions);
  Game g;
  g.type_labels = index_labels("t", types);
  g.action_labels = index_labels("a", actions);
  g.prior = random_prior(rng, types);
  g.sender_utility.resize(types);
  g.receiver_utility.resize(types);
  for (int t = 0; t < types; ++t) {
    g.sender_utility[t].resize(actions);
    g.receiver_utility[t].resize(actions);
    for (int a = 0; a < actions; ++a) {
      g.sender_utility[t][a] = pick_rational(rng);
      g.receiver_utility[t][a] = pick_rational(rng);
    }
  }
  return g;
}

// Random stochastic row over `width` entries: exact, denominators kept small.
inline std::vector<Rat> random_stochastic_row(SplitMix64& rng, int width) {
  std::vector<Rat> row(width);
  Rat total = 0;
  for (Rat& v : row) {
    v = Rat(pick(rng, 0, 4));
    total += v;
  }
  if (total == 0) {
    row[pick(rng, 0, width - 1)] = 1;
    return row;
  }
  for (Rat& v : row) v /= total;
  return row;
}

// Random one-round protocol for a game, alphabet within the validity bound.
inline OneRoundProtocol random_protocol(SplitMix64& rng, const Game& game) {
  OneRoundProtocol p;
  p.alphabet = pick(rng, 1, game.num_types() + 1);
  p.sender_rule.resize(game.num_types());
  for (auto& row : p.sender_rule) row = random_stochastic_row(rng, p.alphabet);
  p.receiver_rule.resize(p.alphabet);
  for (auto& row : p.receiver_rule)
    row = random_stochastic_row(rng, game.num_actions());
  return p;
}

}  // namespace fixtures

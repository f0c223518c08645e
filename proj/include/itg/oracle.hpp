#pragma once

// Brute-force oracle for one-round cheap-talk equilibria. Sender rules are
// enumerated as canonical message partitions (restricted-growth strings, so
// message relabelings are visited once); receiver responses as uniform
// mixtures over every nonempty subset of each on-path posterior-argmax set.
// Unused messages get the response to message 0 echoed onto them: a
// profitable deviation to such a message would already be profitable
// on-path, so no candidate is lost and enlarging the alphabet beyond the
// type count cannot add outcomes.

#include "itg/game.hpp"
#include "itg/hull.hpp"
#include "itg/json_io.hpp"

#include <optional>
#include <vector>

namespace itg {

struct OneRoundProtocol {
  int alphabet = 1;
  std::vector<std::vector<Rat>> sender_rule;    // [type][message], stochastic rows
  std::vector<std::vector<Rat>> receiver_rule;  // [message][action], stochastic rows
};

void validate_protocol(const Game& game, const OneRoundProtocol& protocol);

Json protocol_to_json(const OneRoundProtocol& protocol);
OneRoundProtocol protocol_from_json(const Json& j);

struct EquilibriumRecord {
  OneRoundProtocol protocol;
  Outcome outcome;  // induced conditional action distribution
  Rat sender_value;
  Rat receiver_value;
  std::optional<Rat> welfare;
};

struct EquilibriumSet {
  int alphabet = 1;
  // Distinct outcomes in canonical enumeration order (partition first, then
  // response choice). Identical outcomes from different profiles keep the
  // first witness.
  std::vector<EquilibriumRecord> members;
};

// Errors with AlphabetTooLarge beyond num_types + 1: more messages than
// types plus one spare can only relabel, never separate, so larger requests
// are almost certainly a caller bug.
EquilibriumSet enumerate_equilibria(
    const Game& game, int alphabet,
    const std::optional<Welfare>& welfare = std::nullopt);

// Serial reference implementation; enumerate_equilibria parallelizes over
// sender partitions and must agree with this exactly.
EquilibriumSet enumerate_equilibria_serial(
    const Game& game, int alphabet,
    const std::optional<Welfare>& welfare = std::nullopt);

// Payoff pairs (sender, receiver) achievable by convexifying over the
// enumerated equilibria, as the hull's vertex list; the welfare range covers
// the same closure (welfare is linear, so member extremes are hull extremes).
struct PayoffHull {
  std::vector<RatPoint> vertices;
  std::optional<Rat> welfare_min;
  std::optional<Rat> welfare_max;
};

PayoffHull convexify(const EquilibriumSet& set);

// Best pure deviation against the opponent's side of the protocol, with the
// aggregate utility gain it yields (0 means the current rule is already a
// best response; mixing never beats the best pure deviation).
struct Deviation {
  Player player = Player::Sender;
  Rat gain;
  std::vector<int> sender_map;    // type -> message (Sender)
  std::vector<int> receiver_map;  // message -> action (Receiver)
};

Deviation best_deviation(const Game& game, const OneRoundProtocol& protocol,
                         Player player);

// Joint distribution over (type, action) cells induced by prior and protocol.
std::vector<std::vector<Rat>> joint_outcome(const Game& game,
                                            const OneRoundProtocol& protocol);

// Symmetry rotations for square games (num_types == num_actions == n) under a
// uniform prior (NonUniformPrior otherwise). The sender shift makes type t_i
// message as t_{i-1} did; the receiver shift plays action a+1 wherever the
// old rule played a. They translate the joint distribution one step along
// the type and action axes respectively.
OneRoundProtocol shift_sender(const Game& game,
                              const OneRoundProtocol& protocol);
OneRoundProtocol shift_receiver(const Game& game,
                                const OneRoundProtocol& protocol);

Json equilibrium_set_to_json(const EquilibriumSet& set, bool with_protocols);
Json payoff_hull_to_json(const PayoffHull& hull);

namespace detail {
// Unguarded enumeration used by sufficiency tests: outcome tables only, any
// alphabet >= 1.
std::vector<Outcome> equilibrium_outcomes_unclamped(const Game& game,
                                                    int alphabet);
}  // namespace detail

}  // namespace itg

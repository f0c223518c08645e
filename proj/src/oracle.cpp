#include "itg/oracle.hpp"

#include <algorithm>
#include <exception>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace itg {

void validate_protocol(const Game& game, const OneRoundProtocol& protocol) {
  validate_game(game);
  if (protocol.alphabet < 1)
    throw ValidationError(ValidationCode::MalformedInput,
                          "protocol needs at least one message");
  if (protocol.alphabet > game.num_types() + 1)
    throw ValidationError(
        ValidationCode::AlphabetTooLarge,
        "alphabet of " + std::to_string(protocol.alphabet) +
            " messages exceeds the sufficient bound of " +
            std::to_string(game.num_types() + 1) +
            " (one per type plus one)");
  if (static_cast<int>(protocol.sender_rule.size()) != game.num_types())
    throw ValidationError(ValidationCode::DimensionMismatch,
                          "sender rule needs one row per type");
  if (static_cast<int>(protocol.receiver_rule.size()) != protocol.alphabet)
    throw ValidationError(ValidationCode::DimensionMismatch,
                          "receiver rule needs one row per message");
  const auto check_rows = [](const std::vector<std::vector<Rat>>& rows,
                             std::size_t width, const char* what) {
    for (const auto& row : rows) {
      if (row.size() != width)
        throw ValidationError(ValidationCode::DimensionMismatch,
                              std::string(what) + " row has the wrong width");
      Rat total = 0;
      for (const Rat& v : row) {
        if (v < 0)
          throw ValidationError(ValidationCode::MalformedInput,
                                std::string(what) + " row has a negative entry");
        total += v;
      }
      if (total != 1)
        throw ValidationError(ValidationCode::MalformedInput,
                              std::string(what) + " row sums to " +
                                  format_rational(total));
    }
  };
  check_rows(protocol.sender_rule, protocol.alphabet, "sender rule");
  check_rows(protocol.receiver_rule, game.num_actions(), "receiver rule");
}

Json protocol_to_json(const OneRoundProtocol& protocol) {
  Json j;
  j["alphabet"] = protocol.alphabet;
  j["sender_rule"] = rational_table_to_json(protocol.sender_rule);
  j["receiver_rule"] = rational_table_to_json(protocol.receiver_rule);
  return j;
}

OneRoundProtocol protocol_from_json(const Json& j) {
  OneRoundProtocol p;
  if (!j.is_object() || !j.contains("sender_rule") ||
      !j.contains("receiver_rule"))
    throw ValidationError(ValidationCode::MalformedInput,
                          "protocol needs sender_rule and receiver_rule");
  p.sender_rule = rational_table_from_json(j.at("sender_rule"));
  p.receiver_rule = rational_table_from_json(j.at("receiver_rule"));
  p.alphabet = j.contains("alphabet")
                   ? j.at("alphabet").get<int>()
                   : static_cast<int>(p.receiver_rule.size());
  return p;
}

namespace {

// Message partitions as restricted growth strings: s[0] = 0 and each later
// entry is at most one above the running maximum. Each set partition of the
// types (equivalently, each pure sender rule modulo message relabeling) with
// at most max_messages cells appears exactly once.
std::vector<std::vector<int>> canonical_partitions(int num_types,
                                                   int max_messages) {
  std::vector<std::vector<int>> out;
  if (num_types <= 0) return out;
  std::vector<int> s(num_types, 0);
  const auto recurse = [&](auto&& self, int i, int used) -> void {
    if (i == num_types) {
      out.push_back(s);
      return;
    }
    const int limit = std::min(used + 1, max_messages);
    for (int m = 0; m < limit; ++m) {
      s[i] = m;
      self(self, i + 1, std::max(used, m + 1));
    }
  };
  recurse(recurse, 1, 1);
  return out;
}

Rat mixed_sender_payoff(const Game& game, int type,
                        const std::vector<Rat>& response) {
  Rat v = 0;
  for (int a = 0; a < game.num_actions(); ++a)
    v += response[a] * game.sender_utility[type][a];
  return v;
}

std::string outcome_fingerprint(const Outcome& outcome) {
  std::string key;
  for (const auto& row : outcome.p)
    for (const Rat& v : row) {
      key += format_rational(v);
      key += ',';
    }
  return key;
}

// All equilibria reachable from one message partition, in deterministic
// response-odometer order, deduplicated by induced outcome.
std::vector<EquilibriumRecord> scan_partition(
    const Game& game, const std::vector<int>& assignment, int alphabet,
    const std::optional<Welfare>& welfare) {
  const int nt = game.num_types(), na = game.num_actions();
  const int used = 1 + *std::max_element(assignment.begin(), assignment.end());

  // Posterior-argmax action set per on-path message (scaled by the prior, so
  // no normalization is needed for comparisons).
  std::vector<std::vector<int>> argmax_sets(used);
  for (int m = 0; m < used; ++m) {
    std::vector<Rat> score(na, Rat(0));
    for (int t = 0; t < nt; ++t)
      if (assignment[t] == m)
        for (int a = 0; a < na; ++a)
          score[a] += game.prior[t] * game.receiver_utility[t][a];
    Rat best = score[0];
    for (int a = 1; a < na; ++a)
      if (score[a] > best) best = score[a];
    for (int a = 0; a < na; ++a)
      if (score[a] == best) argmax_sets[m].push_back(a);
  }

  // Candidate responses per message: uniform mixture over every nonempty
  // subset of the argmax set, in submask order.
  std::vector<std::vector<std::vector<Rat>>> responses(used);
  for (int m = 0; m < used; ++m) {
    const auto& actions = argmax_sets[m];
    for (unsigned mask = 1; mask < (1u << actions.size()); ++mask) {
      std::vector<Rat> row(na, Rat(0));
      const int size = __builtin_popcount(mask);
      for (std::size_t bit = 0; bit < actions.size(); ++bit)
        if (mask & (1u << bit)) row[actions[bit]] = Rat(1, size);
      responses[m].push_back(std::move(row));
    }
  }

  std::vector<EquilibriumRecord> records;
  std::vector<std::string> seen;
  std::vector<std::size_t> choice(used, 0);
  for (;;) {
    // Sender best-response check: each type must weakly prefer its assigned
    // message to every other used message. Unused messages echo the response
    // to message 0, so deviations to them are dominated by on-path ones.
    bool equilibrium = true;
    for (int t = 0; t < nt && equilibrium; ++t) {
      const Rat current =
          mixed_sender_payoff(game, t, responses[assignment[t]][choice[assignment[t]]]);
      for (int m = 0; m < used; ++m)
        if (mixed_sender_payoff(game, t, responses[m][choice[m]]) > current) {
          equilibrium = false;
          break;
        }
    }

    if (equilibrium) {
      EquilibriumRecord rec;
      rec.protocol.alphabet = alphabet;
      rec.protocol.sender_rule.assign(nt, std::vector<Rat>(alphabet, Rat(0)));
      for (int t = 0; t < nt; ++t) rec.protocol.sender_rule[t][assignment[t]] = 1;
      rec.protocol.receiver_rule.reserve(alphabet);
      for (int m = 0; m < used; ++m)
        rec.protocol.receiver_rule.push_back(responses[m][choice[m]]);
      for (int m = used; m < alphabet; ++m)
        rec.protocol.receiver_rule.push_back(rec.protocol.receiver_rule[0]);

      rec.outcome.p.reserve(nt);
      for (int t = 0; t < nt; ++t)
        rec.outcome.p.push_back(rec.protocol.receiver_rule[assignment[t]]);
      rec.sender_value = expected_utility(game, rec.outcome, Player::Sender);
      rec.receiver_value = expected_utility(game, rec.outcome, Player::Receiver);
      if (welfare)
        rec.welfare = expected_welfare(game, rec.outcome, *welfare);

      std::string key = outcome_fingerprint(rec.outcome);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(std::move(key));
        records.push_back(std::move(rec));
      }
    }

    // Advance the response odometer (last message fastest).
    int pos = used - 1;
    while (pos >= 0 && ++choice[pos] == responses[pos].size()) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return records;
}

EquilibriumSet enumerate_impl(const Game& game, int alphabet,
                              const std::optional<Welfare>& welfare,
                              bool parallel) {
  validate_game(game);
  if (welfare) validate_welfare(game, *welfare);
  if (alphabet < 1)
    throw ValidationError(ValidationCode::MalformedInput,
                          "alphabet must be at least 1");

  const int width = std::min(alphabet, game.num_types());
  const std::vector<std::vector<int>> partitions =
      canonical_partitions(game.num_types(), width);
  std::vector<std::vector<EquilibriumRecord>> buckets(partitions.size());

  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(partitions.size()); ++i) {
      try {
        buckets[i] = scan_partition(game, partitions[i], alphabet, welfare);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < partitions.size(); ++i)
      buckets[i] = scan_partition(game, partitions[i], alphabet, welfare);
  }

  EquilibriumSet set;
  set.alphabet = alphabet;
  std::vector<std::string> seen;
  for (auto& bucket : buckets)
    for (auto& rec : bucket) {
      std::string key = outcome_fingerprint(rec.outcome);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(std::move(key));
        set.members.push_back(std::move(rec));
      }
    }
  return set;
}

void check_alphabet(const Game& game, int alphabet) {
  if (alphabet > game.num_types() + 1)
    throw ValidationError(
        ValidationCode::AlphabetTooLarge,
        "alphabet " + std::to_string(alphabet) + " exceeds " +
            std::to_string(game.num_types() + 1) +
            " (types + 1); extra messages can only relabel equilibria");
}

}  // namespace

EquilibriumSet enumerate_equilibria(const Game& game, int alphabet,
                                    const std::optional<Welfare>& welfare) {
  check_alphabet(game, alphabet);
  return enumerate_impl(game, alphabet, welfare, true);
}

EquilibriumSet enumerate_equilibria_serial(
    const Game& game, int alphabet, const std::optional<Welfare>& welfare) {
  check_alphabet(game, alphabet);
  return enumerate_impl(game, alphabet, welfare, false);
}

PayoffHull convexify(const EquilibriumSet& set) {
  PayoffHull hull;
  std::vector<RatPoint> points;
  points.reserve(set.members.size());
  for (const EquilibriumRecord& m : set.members) {
    points.emplace_back(m.sender_value, m.receiver_value);
    if (m.welfare) {
      if (!hull.welfare_min || *m.welfare < *hull.welfare_min)
        hull.welfare_min = m.welfare;
      if (!hull.welfare_max || *m.welfare > *hull.welfare_max)
        hull.welfare_max = m.welfare;
    }
  }
  hull.vertices = convex_hull(std::move(points));
  return hull;
}

Deviation best_deviation(const Game& game, const OneRoundProtocol& protocol,
                         Player player) {
  validate_protocol(game, protocol);
  const int nt = game.num_types(), na = game.num_actions();
  const int alphabet = protocol.alphabet;

  Deviation dev;
  dev.player = player;
  if (player == Player::Sender) {
    // Types deviate independently, so the best pure map picks each type's
    // best message; mixing over messages can never beat the best one.
    dev.sender_map.resize(nt);
    Rat gain = 0;
    for (int t = 0; t < nt; ++t) {
      Rat current = 0;
      for (int m = 0; m < alphabet; ++m)
        current += protocol.sender_rule[t][m] *
                   mixed_sender_payoff(game, t, protocol.receiver_rule[m]);
      int best_message = 0;
      Rat best = mixed_sender_payoff(game, t, protocol.receiver_rule[0]);
      for (int m = 1; m < alphabet; ++m) {
        const Rat v = mixed_sender_payoff(game, t, protocol.receiver_rule[m]);
        if (v > best) {
          best = v;
          best_message = m;
        }
      }
      dev.sender_map[t] = best_message;
      gain += game.prior[t] * (best - current);
    }
    dev.gain = gain;
    return dev;
  }

  // Receiver: decompose by message; the optimal response to message m
  // maximizes the prior-weighted utility over the types that send it.
  dev.receiver_map.resize(alphabet);
  Rat current = 0;
  for (int t = 0; t < nt; ++t)
    for (int m = 0; m < alphabet; ++m)
      for (int a = 0; a < na; ++a)
        current += game.prior[t] * protocol.sender_rule[t][m] *
                   protocol.receiver_rule[m][a] * game.receiver_utility[t][a];
  Rat best_total = 0;
  for (int m = 0; m < alphabet; ++m) {
    std::vector<Rat> weight(na, Rat(0));
    for (int t = 0; t < nt; ++t)
      if (protocol.sender_rule[t][m] != 0)
        for (int a = 0; a < na; ++a)
          weight[a] += game.prior[t] * protocol.sender_rule[t][m] *
                       game.receiver_utility[t][a];
    int best_action = 0;
    for (int a = 1; a < na; ++a)
      if (weight[a] > weight[best_action]) best_action = a;
    dev.receiver_map[m] = best_action;
    best_total += weight[best_action];
  }
  dev.gain = best_total - current;
  return dev;
}

std::vector<std::vector<Rat>> joint_outcome(const Game& game,
                                            const OneRoundProtocol& protocol) {
  validate_protocol(game, protocol);
  const int nt = game.num_types(), na = game.num_actions();
  std::vector<std::vector<Rat>> joint(nt, std::vector<Rat>(na, Rat(0)));
  for (int t = 0; t < nt; ++t)
    for (int m = 0; m < protocol.alphabet; ++m) {
      if (protocol.sender_rule[t][m] == 0) continue;
      for (int a = 0; a < na; ++a)
        joint[t][a] += game.prior[t] * protocol.sender_rule[t][m] *
                       protocol.receiver_rule[m][a];
    }
  return joint;
}

namespace {

void require_square_uniform(const Game& game) {
  if (game.num_types() != game.num_actions())
    throw ValidationError(ValidationCode::DimensionMismatch,
                          "shift symmetry needs as many actions as types");
  for (const Rat& p : game.prior)
    if (p != Rat(1, game.num_types()))
      throw ValidationError(ValidationCode::NonUniformPrior,
                            "shift symmetry needs a uniform prior");
}

}  // namespace

OneRoundProtocol shift_sender(const Game& game,
                              const OneRoundProtocol& protocol) {
  validate_protocol(game, protocol);
  require_square_uniform(game);
  const int n = game.num_types();
  OneRoundProtocol shifted = protocol;
  for (int t = 0; t < n; ++t)
    shifted.sender_rule[t] = protocol.sender_rule[(t + n - 1) % n];
  return shifted;
}

OneRoundProtocol shift_receiver(const Game& game,
                                const OneRoundProtocol& protocol) {
  validate_protocol(game, protocol);
  require_square_uniform(game);
  const int n = game.num_actions();
  OneRoundProtocol shifted = protocol;
  for (int m = 0; m < protocol.alphabet; ++m)
    for (int a = 0; a < n; ++a)
      shifted.receiver_rule[m][a] = protocol.receiver_rule[m][(a + n - 1) % n];
  return shifted;
}

Json equilibrium_set_to_json(const EquilibriumSet& set, bool with_protocols) {
  Json members = Json::array();
  for (const EquilibriumRecord& m : set.members) {
    Json entry;
    if (with_protocols) entry["protocol"] = protocol_to_json(m.protocol);
    entry["outcome"] = outcome_to_json(m.outcome);
    entry["sender_value"] = rational_to_json(m.sender_value);
    entry["receiver_value"] = rational_to_json(m.receiver_value);
    if (m.welfare) entry["welfare"] = rational_to_json(*m.welfare);
    members.push_back(std::move(entry));
  }
  Json j;
  j["alphabet"] = set.alphabet;
  j["count"] = set.members.size();
  j["members"] = std::move(members);
  return j;
}

Json payoff_hull_to_json(const PayoffHull& hull) {
  Json vertices = Json::array();
  for (const RatPoint& v : hull.vertices)
    vertices.push_back({rational_to_json(v.first), rational_to_json(v.second)});
  Json j;
  j["vertices"] = std::move(vertices);
  if (hull.welfare_min) j["welfare_min"] = rational_to_json(*hull.welfare_min);
  if (hull.welfare_max) j["welfare_max"] = rational_to_json(*hull.welfare_max);
  return j;
}

namespace detail {

std::vector<Outcome> equilibrium_outcomes_unclamped(const Game& game,
                                                    int alphabet) {
  const EquilibriumSet set = enumerate_impl(game, alphabet, std::nullopt, false);
  std::vector<Outcome> outcomes;
  outcomes.reserve(set.members.size());
  for (const EquilibriumRecord& m : set.members) outcomes.push_back(m.outcome);
  return outcomes;
}

}  // namespace detail

}  // namespace itg

#include "itg/simulate.hpp"

#include <cmath>
#include <exception>

namespace itg {

BigInt uniform_below(SplitMix64& rng, const BigInt& bound) {
  if (bound <= 0) throw InternalError("uniform_below needs a positive bound");
  if (bound == 1) return 0;
  unsigned words = 0;
  for (BigInt b = bound - 1; b > 0; b >>= 64) ++words;
  const BigInt space = BigInt(1) << (64 * words);
  const BigInt limit = space - space % bound;  // multiple of bound, > 0
  for (;;) {
    BigInt draw = 0;
    for (unsigned w = 0; w < words; ++w) draw = (draw << 64) | BigInt(rng.next());
    if (draw < limit) return draw % bound;
  }
}

ExactSampler::ExactSampler(const std::vector<Rat>& probabilities) {
  std::vector<Rat> positive;
  Rat total = 0;
  for (const Rat& p : probabilities) {
    if (p < 0) throw InternalError("sampler probability below zero");
    total += p;
  }
  if (total != 1) throw InternalError("sampler probabilities must sum to 1");
  denominator_ = common_denominator(probabilities);
  thresholds_.reserve(probabilities.size());
  BigInt cumulative = 0;
  for (const Rat& p : probabilities) {
    cumulative += num(p) * (denominator_ / den(p));
    thresholds_.push_back(cumulative);
  }
}

int ExactSampler::sample(SplitMix64& rng) const {
  const BigInt draw = uniform_below(rng, denominator_);
  for (std::size_t i = 0; i < thresholds_.size(); ++i)
    if (draw < thresholds_[i]) return static_cast<int>(i);
  throw InternalError("sampler draw escaped its own support");
}

namespace {

// Exact running sums; everything stays rational until reporting.
struct Accumulator {
  Rat sum;
  Rat sum_squares;

  void add(const Rat& x) {
    sum += x;
    sum_squares += x * x;
  }
  void merge(const Accumulator& other) {
    sum += other.sum;
    sum_squares += other.sum_squares;
  }
};

EmpiricalEstimate finalize(const Accumulator& acc, std::uint64_t trials,
                           std::optional<Rat> reference) {
  EmpiricalEstimate est;
  est.trials = trials;
  const Rat n{BigInt(trials)};
  est.exact_mean = acc.sum / n;
  est.mean = to_double(est.exact_mean);
  if (trials > 1) {
    // Unbiased sample variance, exactly: (sum_sq - n*mean^2) / (n - 1).
    const Rat variance =
        (acc.sum_squares - n * est.exact_mean * est.exact_mean) / (n - 1);
    est.std_error = std::sqrt(to_double(variance / n));
  }
  est.reference = std::move(reference);
  return est;
}

// One playout chain: a list of exact samplers walked left to right, where
// each stage picks the next stage's row. Mediated play is (prior -> outcome
// row); cheap talk is (prior -> message row -> action row).
struct TrialResult {
  int type = 0;
  int action = 0;
  int message = -1;  // cheap talk only
};

template <typename Trial>
SimulationResult run_common(const Game& game,
                            const std::optional<Welfare>& welfare,
                            std::uint64_t seed, std::uint64_t trials,
                            std::uint64_t emit_transcripts, bool parallel,
                            Trial&& trial_fn) {
  if (trials == 0)
    throw ValidationError(ValidationCode::MalformedInput,
                          "at least one trial is required");
  if (welfare) validate_welfare(game, *welfare);
  emit_transcripts = std::min(emit_transcripts, trials);

  SimulationResult result;
  result.seed = seed;
  result.trials = trials;
  result.transcripts.resize(emit_transcripts);

  Accumulator sender, receiver, welf;
  const long long n = static_cast<long long>(trials);
  std::exception_ptr failure;

#pragma omp parallel if (parallel)
  {
    Accumulator local_sender, local_receiver, local_welf;
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) {
      try {
        SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
        const TrialResult t = trial_fn(rng);
        local_sender.add(game.sender_utility[t.type][t.action]);
        local_receiver.add(game.receiver_utility[t.type][t.action]);
        if (welfare) local_welf.add(welfare->table[t.type][t.action]);
        if (static_cast<std::uint64_t>(i) < emit_transcripts) {
          Transcript& tr = result.transcripts[i];
          tr.trial = static_cast<std::uint64_t>(i);
          tr.type = t.type;
          tr.action = t.action;
          const std::string& type_label = game.type_labels[t.type];
          const std::string& action_label = game.action_labels[t.action];
          if (t.message >= 0) {
            tr.steps = {{1, "sender", "receiver", "m" + std::to_string(t.message)},
                        {2, "receiver", "game", action_label}};
          } else {
            tr.steps = {{1, "sender", "mediator", type_label},
                        {2, "mediator", "receiver", action_label},
                        {3, "receiver", "game", action_label}};
          }
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    // Rational addition is exact, so merge order cannot change the totals;
    // the critical section only guards the shared object.
#pragma omp critical
    {
      sender.merge(local_sender);
      receiver.merge(local_receiver);
      welf.merge(local_welf);
    }
  }
  if (failure) std::rethrow_exception(failure);

  result.sender = finalize(sender, trials, std::nullopt);
  result.receiver = finalize(receiver, trials, std::nullopt);
  if (welfare) result.welfare = finalize(welf, trials, std::nullopt);
  return result;
}

SimulationResult run_mediated_impl(const Game& game, const Outcome& outcome,
                                   const std::optional<Welfare>& welfare,
                                   std::uint64_t seed, std::uint64_t trials,
                                   std::uint64_t emit_transcripts,
                                   bool parallel) {
  validate_game(game);
  validate_outcome(game, outcome);
  const ExactSampler prior(game.prior);
  std::vector<ExactSampler> rows;
  rows.reserve(outcome.p.size());
  for (const auto& row : outcome.p) rows.emplace_back(row);

  SimulationResult result = run_common(
      game, welfare, seed, trials, emit_transcripts, parallel,
      [&](SplitMix64& rng) {
        TrialResult t;
        t.type = prior.sample(rng);
        t.action = rows[t.type].sample(rng);
        if (outcome.p[t.type][t.action] <= 0)
          throw InternalError("sampled an action outside the outcome support");
        return t;
      });
  result.sender.reference = expected_utility(game, outcome, Player::Sender);
  result.receiver.reference = expected_utility(game, outcome, Player::Receiver);
  if (welfare) result.welfare->reference =
      expected_welfare(game, outcome, *welfare);
  return result;
}

SimulationResult run_cheaptalk_impl(const Game& game,
                                    const OneRoundProtocol& protocol,
                                    const std::optional<Welfare>& welfare,
                                    std::uint64_t seed, std::uint64_t trials,
                                    std::uint64_t emit_transcripts,
                                    bool parallel) {
  validate_protocol(game, protocol);
  const ExactSampler prior(game.prior);
  std::vector<ExactSampler> messages, actions;
  for (const auto& row : protocol.sender_rule) messages.emplace_back(row);
  for (const auto& row : protocol.receiver_rule) actions.emplace_back(row);

  SimulationResult result = run_common(
      game, welfare, seed, trials, emit_transcripts, parallel,
      [&](SplitMix64& rng) {
        TrialResult t;
        t.type = prior.sample(rng);
        t.message = messages[t.type].sample(rng);
        t.action = actions[t.message].sample(rng);
        return t;
      });

  // Analytic references from the induced conditional outcome table.
  Outcome induced;
  induced.p.assign(game.num_types(),
                   std::vector<Rat>(game.num_actions(), Rat(0)));
  for (int t = 0; t < game.num_types(); ++t)
    for (int m = 0; m < protocol.alphabet; ++m)
      for (int a = 0; a < game.num_actions(); ++a)
        induced.p[t][a] +=
            protocol.sender_rule[t][m] * protocol.receiver_rule[m][a];
  result.sender.reference = expected_utility(game, induced, Player::Sender);
  result.receiver.reference = expected_utility(game, induced, Player::Receiver);
  if (welfare) result.welfare->reference =
      expected_welfare(game, induced, *welfare);
  return result;
}

}  // namespace

SimulationResult run_mediated(const Game& game, const Outcome& outcome,
                              const std::optional<Welfare>& welfare,
                              std::uint64_t seed, std::uint64_t trials,
                              std::uint64_t emit_transcripts) {
  return run_mediated_impl(game, outcome, welfare, seed, trials,
                           emit_transcripts, true);
}

SimulationResult run_mediated_serial(const Game& game, const Outcome& outcome,
                                     const std::optional<Welfare>& welfare,
                                     std::uint64_t seed, std::uint64_t trials,
                                     std::uint64_t emit_transcripts) {
  return run_mediated_impl(game, outcome, welfare, seed, trials,
                           emit_transcripts, false);
}

SimulationResult run_cheaptalk(const Game& game,
                               const OneRoundProtocol& protocol,
                               const std::optional<Welfare>& welfare,
                               std::uint64_t seed, std::uint64_t trials,
                               std::uint64_t emit_transcripts) {
  return run_cheaptalk_impl(game, protocol, welfare, seed, trials,
                            emit_transcripts, true);
}

SimulationResult run_cheaptalk_serial(const Game& game,
                                      const OneRoundProtocol& protocol,
                                      const std::optional<Welfare>& welfare,
                                      std::uint64_t seed, std::uint64_t trials,
                                      std::uint64_t emit_transcripts) {
  return run_cheaptalk_impl(game, protocol, welfare, seed, trials,
                            emit_transcripts, false);
}

Json transcript_to_json(const Transcript& transcript) {
  Json steps = Json::array();
  for (const TranscriptStep& s : transcript.steps)
    steps.push_back({{"round", s.round},
                     {"from", s.from},
                     {"to", s.to},
                     {"payload", s.payload}});
  Json j;
  j["trial"] = transcript.trial;
  j["type"] = transcript.type;
  j["action"] = transcript.action;
  j["steps"] = std::move(steps);
  return j;
}

namespace {

Json estimate_to_json(const EmpiricalEstimate& est) {
  Json j;
  j["trials"] = est.trials;
  j["mean"] = est.mean;
  j["std_error"] = est.std_error;
  j["exact_mean"] = rational_to_json(est.exact_mean);
  if (est.reference) j["reference"] = rational_to_json(*est.reference);
  return j;
}

}  // namespace

Json simulation_to_json(const SimulationResult& result, bool with_transcripts) {
  Json j;
  j["seed"] = result.seed;
  j["trials"] = result.trials;
  j["sender"] = estimate_to_json(result.sender);
  j["receiver"] = estimate_to_json(result.receiver);
  if (result.welfare) j["welfare"] = estimate_to_json(*result.welfare);
  if (with_transcripts) {
    Json transcripts = Json::array();
    for (const Transcript& t : result.transcripts)
      transcripts.push_back(transcript_to_json(t));
    j["transcripts"] = std::move(transcripts);
  }
  return j;
}

}  // namespace itg

#pragma once

// Seeded Monte Carlo playout of mediated and one-round cheap-talk protocols.
// The generator is SplitMix64 (Steele/Lea/Flood mixing constants): portable,
// tiny, and 64-bit reproducible across platforms. Every trial runs on its own
// substream derived from (seed, trial index), so a run's results do not
// depend on scheduling; all sampling is exact (uniform integer below the
// common denominator of the distribution), and accumulators stay rational
// until the final mean/error conversion, which makes the parallel runner
// byte-identical to the serial reference.

#include "itg/game.hpp"
#include "itg/json_io.hpp"
#include "itg/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace itg {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

// One mixing round keyed by trial index; distinct trials get distinct,
// well-dispersed generator states for any fixed seed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1))).next();
}

// Uniform integer in [0, bound) by rejection below the largest multiple of
// `bound` representable in whole 64-bit words. Exact for any bound >= 1.
BigInt uniform_below(SplitMix64& rng, const BigInt& bound);

// Exact categorical sampler: thresholds are cumulative numerators over the
// common denominator, so every draw lands on a positive-probability index.
class ExactSampler {
public:
  explicit ExactSampler(const std::vector<Rat>& probabilities);
  int sample(SplitMix64& rng) const;

private:
  BigInt denominator_;
  std::vector<BigInt> thresholds_;  // cumulative, last one == denominator_
};

struct TranscriptStep {
  int round = 0;
  std::string from;
  std::string to;
  std::string payload;
};

struct Transcript {
  std::uint64_t trial = 0;
  int type = -1;
  int action = -1;
  std::vector<TranscriptStep> steps;
};

struct EmpiricalEstimate {
  std::uint64_t trials = 0;
  double mean = 0;
  double std_error = 0;  // sample std dev / sqrt(trials); 0 for a single trial
  Rat exact_mean;        // exact sample mean, before any rounding
  std::optional<Rat> reference;  // analytic expectation
};

struct SimulationResult {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  EmpiricalEstimate sender;
  EmpiricalEstimate receiver;
  std::optional<EmpiricalEstimate> welfare;
  std::vector<Transcript> transcripts;  // first emit_transcripts trials
};

// Mediated playout: draw a type, then an action from the outcome row.
SimulationResult run_mediated(const Game& game, const Outcome& outcome,
                              const std::optional<Welfare>& welfare,
                              std::uint64_t seed, std::uint64_t trials,
                              std::uint64_t emit_transcripts = 0);
SimulationResult run_mediated_serial(const Game& game, const Outcome& outcome,
                                     const std::optional<Welfare>& welfare,
                                     std::uint64_t seed, std::uint64_t trials,
                                     std::uint64_t emit_transcripts = 0);

// Cheap-talk playout: draw a type, a message, then an action.
SimulationResult run_cheaptalk(const Game& game,
                               const OneRoundProtocol& protocol,
                               const std::optional<Welfare>& welfare,
                               std::uint64_t seed, std::uint64_t trials,
                               std::uint64_t emit_transcripts = 0);
SimulationResult run_cheaptalk_serial(const Game& game,
                                      const OneRoundProtocol& protocol,
                                      const std::optional<Welfare>& welfare,
                                      std::uint64_t seed, std::uint64_t trials,
                                      std::uint64_t emit_transcripts = 0);

Json transcript_to_json(const Transcript& transcript);
Json simulation_to_json(const SimulationResult& result,
                        bool with_transcripts = true);

}  // namespace itg

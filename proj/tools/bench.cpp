// Compares the OpenMP kernels against their serial reference
// implementations: the equilibrium oracle (parallel over message partitions)
// and the simulator (parallel over trials). Results must agree exactly; the
// timings show whatever speedup the machine's thread count allows.
//
// Usage: itg_bench [trials] [oracle_types] [oracle_actions]

#include "itg/oracle.hpp"
#include "itg/simulate.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
#else
#include <chrono>
static double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
#endif

using namespace itg;

namespace {

// Deterministic synthetic game with coarse utilities (denominators <= 3), so
// posterior ties occur and the oracle has real response products to chew on.
Game synthetic_game(int types, int actions, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto coarse = [&rng]() {
    const int numerator = static_cast<int>(rng.next() % 6);
    const int denominator = 1 + static_cast<int>(rng.next() % 3);
    return Rat(numerator, denominator);
  };
  Game game;
  for (int t = 0; t < types; ++t) {
    game.type_labels.push_back("t" + std::to_string(t));
    game.prior.push_back(Rat(1, types));
    std::vector<Rat> us, ur;
    for (int a = 0; a < actions; ++a) {
      us.push_back(coarse());
      ur.push_back(coarse());
    }
    game.sender_utility.push_back(std::move(us));
    game.receiver_utility.push_back(std::move(ur));
  }
  for (int a = 0; a < actions; ++a)
    game.action_labels.push_back(std::to_string(a));
  return game;
}

bool same_outcomes(const EquilibriumSet& a, const EquilibriumSet& b) {
  if (a.members.size() != b.members.size()) return false;
  for (std::size_t i = 0; i < a.members.size(); ++i)
    if (a.members[i].outcome.p != b.members[i].outcome.p) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t trials =
      argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  const int types = argc > 2 ? std::atoi(argv[2]) : 5;
  const int actions = argc > 3 ? std::atoi(argv[3]) : 4;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-22s %10s %10s %8s %6s\n", "kernel", "serial_s", "parallel_s",
              "speedup", "agree");

  {
    const Game game = synthetic_game(types, actions, 0x17);
    double t0 = now();
    const EquilibriumSet serial =
        enumerate_equilibria_serial(game, game.num_types() + 1);
    double t1 = now();
    const EquilibriumSet parallel =
        enumerate_equilibria(game, game.num_types() + 1);
    double t2 = now();
    std::printf("%-22s %10.3f %10.3f %7.2fx %6s\n",
                ("oracle(" + std::to_string(types) + "x" +
                 std::to_string(actions) + ")")
                    .c_str(),
                t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9),
                same_outcomes(serial, parallel) ? "yes" : "NO");
  }

  {
    const Game game = synthetic_game(3, 4, 0x2a);
    Outcome outcome;
    outcome.p.assign(3, {Rat(1, 2), Rat(1, 6), Rat(1, 6), Rat(1, 6)});
    double t0 = now();
    const SimulationResult serial =
        run_mediated_serial(game, outcome, std::nullopt, 7, trials);
    double t1 = now();
    const SimulationResult parallel =
        run_mediated(game, outcome, std::nullopt, 7, trials);
    double t2 = now();
    const bool agree =
        serial.sender.exact_mean == parallel.sender.exact_mean &&
        serial.receiver.exact_mean == parallel.receiver.exact_mean;
    std::printf("%-22s %10.3f %10.3f %7.2fx %6s\n",
                ("simulate(" + std::to_string(trials) + ")").c_str(), t1 - t0,
                t2 - t1, (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9),
                agree ? "yes" : "NO");
  }
  return 0;
}

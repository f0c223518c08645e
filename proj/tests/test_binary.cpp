#include "itg/binary.hpp"

#include <doctest.h>

#include "itg/hull.hpp"
#include "itg/mediated.hpp"

#include "fixtures.hpp"

using namespace itg;

namespace {

// Two-type games around the binary case split. `receiver_rows` drives the
// B coefficients; the sender always splits the types across the two cells.
Game two_cell_game(std::vector<Rat> prior,
                   std::vector<std::vector<Rat>> receiver_rows) {
  Game g;
  g.type_labels = {"t0", "t1"};
  g.action_labels = {"0", "1"};
  g.prior = std::move(prior);
  g.sender_utility = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  g.receiver_utility = std::move(receiver_rows);
  return g;
}

Game only_constant_one_game() {
  return two_cell_game({Rat(1, 2), Rat(1, 2)},
                       {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}});
}

Game only_constant_zero_game() {
  return two_cell_game({Rat(1, 2), Rat(1, 2)},
                       {{Rat(0), Rat(1)}, {Rat(0), Rat(1)}});
}

Game diagonal_game() {
  return two_cell_game({Rat(1, 3), Rat(2, 3)},
                       {{Rat(0), Rat(1)}, {Rat(1, 2), Rat(0)}});
}

bool grid_matches_region(const Game& game, int steps = 7) {
  const BinaryAnalysis analysis = classify(game);
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j) {
      const Rat p0(i, steps), p1(j, steps);
      if (feasible_binary(game, p0, p1) !=
          inside_hull(analysis.region_vertices, {p0, p1}))
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("the binary example splits one type per cell") {
  const BinaryPartition part = partition_types(fixtures::two_type_binary());
  CHECK(part.cell_zero == std::vector<int>{0});
  CHECK(part.cell_one == std::vector<int>{1});
}

TEST_CASE("sender indifference defers to the receiver, then to cell one") {
  Game g = fixtures::two_type_binary();
  g.sender_utility[0] = {Rat(1), Rat(1)};  // indifferent; receiver prefers 0
  CHECK(partition_types(g).cell_zero == std::vector<int>{0});

  g.receiver_utility[0] = {Rat(1), Rat(1)};  // both indifferent
  const BinaryPartition part = partition_types(g);
  CHECK(part.cell_zero.empty());
  CHECK(part.cell_one == std::vector<int>{0, 1});
}

TEST_CASE("coefficients of the binary example") {
  const Game g = fixtures::two_type_binary();
  const BinaryCoefficients c = binary_coefficients(g, partition_types(g));
  CHECK(c.a00 == Rat(1, 2));
  CHECK(c.a10 == Rat(0));
  CHECK(c.a01 == Rat(1, 4));
  CHECK(c.a11 == Rat(1, 2));
  CHECK(c.b0 == Rat(1, 2));
  CHECK(c.b1 == Rat(-1, 4));
}

TEST_CASE("coefficients vanish with the receiver utility and scale with it") {
  Game g = fixtures::two_type_binary();
  g.receiver_utility = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  const BinaryCoefficients zero = binary_coefficients(g, partition_types(g));
  CHECK(zero.a00 == 0);
  CHECK(zero.a01 == 0);
  CHECK(zero.a10 == 0);
  CHECK(zero.a11 == 0);

  const Game base = fixtures::two_type_binary();
  Game doubled = base;
  for (auto& row : doubled.receiver_utility)
    for (Rat& v : row) v *= 2;
  const BinaryCoefficients c = binary_coefficients(base, partition_types(base));
  const BinaryCoefficients d =
      binary_coefficients(doubled, partition_types(doubled));
  CHECK(d.a00 == 2 * c.a00);
  CHECK(d.b0 == 2 * c.b0);
  CHECK(d.b1 == 2 * c.b1);
}

TEST_CASE("the binary example is aligned with the documented region") {
  const BinaryAnalysis analysis = classify(fixtures::two_type_binary());
  CHECK(analysis.kind == BinaryCase::Aligned);
  CHECK(std::string(to_string(analysis.kind)) == "aligned");
  CHECK(analysis.region_vertices ==
        std::vector<RatPoint>{{Rat(1, 2), Rat(0)}, {Rat(1), Rat(0)},
                              {Rat(1), Rat(1)}});
  CHECK(analysis.optimal == RatPoint{Rat(1), Rat(0)});
}

TEST_CASE("collapsed and diagonal regions classify by the B coefficients") {
  const BinaryAnalysis one = classify(only_constant_one_game());
  CHECK(one.kind == BinaryCase::OnlyConstantOne);
  CHECK(one.region_vertices == std::vector<RatPoint>{{Rat(1), Rat(1)}});

  const BinaryAnalysis zero = classify(only_constant_zero_game());
  CHECK(zero.kind == BinaryCase::OnlyConstantZero);
  CHECK(zero.region_vertices == std::vector<RatPoint>{{Rat(0), Rat(0)}});

  const BinaryAnalysis diag = classify(diagonal_game());
  CHECK(diag.kind == BinaryCase::DiagonalOnly);
  CHECK(diag.region_vertices ==
        std::vector<RatPoint>{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
}

TEST_CASE("membership of the documented points") {
  const Game g = fixtures::two_type_binary();
  CHECK(feasible_binary(g, Rat(1, 2), Rat(0)));
  CHECK(feasible_binary(g, Rat(1), Rat(1)));
  CHECK(feasible_binary(g, Rat(3, 4), Rat(1, 4)));
  CHECK_FALSE(feasible_binary(g, Rat(0), Rat(0)));
  CHECK_FALSE(feasible_binary(g, Rat(1, 2), Rat(1, 2)));
  CHECK_FALSE(feasible_binary(g, Rat(1, 4), Rat(1, 2)));  // p1 > p0
  CHECK_FALSE(feasible_binary(g, Rat(5, 4), Rat(0)));     // p0 > 1
}

TEST_CASE("region vertices and grid membership agree on every case") {
  CHECK(grid_matches_region(fixtures::two_type_binary()));
  CHECK(grid_matches_region(only_constant_one_game()));
  CHECK(grid_matches_region(only_constant_zero_game()));
  CHECK(grid_matches_region(diagonal_game()));
}

TEST_CASE("two-value outcomes place the cells on their probabilities") {
  const Game g = fixtures::two_type_binary();
  const Outcome out = binary_outcome(g, Rat(1, 2), Rat(0));
  CHECK(out.p == fixtures::binary_example_optimum().p);
}

TEST_CASE("aligned optimum maximizes both utilities over the region") {
  const Game g = fixtures::two_type_binary();
  const BinaryAnalysis analysis = classify(g);
  REQUIRE(analysis.kind == BinaryCase::Aligned);
  const Outcome best = binary_outcome(g, Rat(1), Rat(0));
  const Rat best_s = expected_utility(g, best, Player::Sender);
  const Rat best_r = expected_utility(g, best, Player::Receiver);
  for (const RatPoint& v : analysis.region_vertices) {
    const Outcome other = binary_outcome(g, v.first, v.second);
    CHECK(best_s >= expected_utility(g, other, Player::Sender));
    CHECK(best_r >= expected_utility(g, other, Player::Receiver));
  }
}

TEST_CASE("welfare optima of the binary example under monotone welfare") {
  const Game g = fixtures::two_type_binary();

  const BinaryOptimum by_sender = optimal_binary_outcome(g, welfare_from_sender(g));
  CHECK(by_sender.value == Rat(1));
  CHECK(by_sender.p0 == Rat(1));
  CHECK(by_sender.p1 == Rat(0));

  const BinaryOptimum by_receiver =
      optimal_binary_outcome(g, welfare_from_receiver(g));
  CHECK(by_receiver.value == Rat(1));

  const BinaryOptimum by_sum = optimal_binary_outcome(g, welfare_sum(g));
  CHECK(by_sum.value == Rat(2));
  CHECK(by_sum.outcome.p ==
        std::vector<std::vector<Rat>>{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

TEST_CASE("non-monotone welfare is rejected by the closed form") {
  const Game g = fixtures::two_type_binary();
  try {
    optimal_binary_outcome(g, fixtures::binary_example_welfare());
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationCode::NotMonotone);
  }
}

TEST_CASE("collapsed regions pay whatever their single point pays") {
  const Game one = only_constant_one_game();
  const BinaryOptimum always_zero = optimal_binary_outcome(one, welfare_sum(one));
  CHECK(always_zero.p0 == Rat(1));
  CHECK(always_zero.p1 == Rat(1));
  CHECK(always_zero.value == Rat(3, 2));

  const Game zero = only_constant_zero_game();
  const BinaryOptimum always_one = optimal_binary_outcome(zero, welfare_sum(zero));
  CHECK(always_one.p0 == Rat(0));
  CHECK(always_one.p1 == Rat(0));
  CHECK(always_one.value == Rat(3, 2));
}

TEST_CASE("the diagonal segment picks its endpoint by welfare slope") {
  const Game g = diagonal_game();

  const Welfare down{{{Rat(1), Rat(3)}, {Rat(0), Rat(1)}}, "file"};
  const BinaryOptimum at_zero = optimal_binary_outcome(g, down);
  CHECK(at_zero.p0 == Rat(0));
  CHECK(at_zero.p1 == Rat(0));
  CHECK(at_zero.value == Rat(5, 3));

  const Welfare up{{{Rat(0), Rat(3)}, {Rat(3), Rat(0)}}, "file"};
  const BinaryOptimum at_one = optimal_binary_outcome(g, up);
  CHECK(at_one.p0 == Rat(1));
  CHECK(at_one.p1 == Rat(1));
  CHECK(at_one.value == Rat(2));

  const Welfare flat{{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, "file"};
  const BinaryOptimum tied = optimal_binary_outcome(g, flat);
  CHECK(tied.p0 == Rat(0));  // ties resolve to the smaller endpoint
  CHECK(tied.value == Rat(1));
}

TEST_CASE("cheap-talk value is exact for monotone welfare") {
  const Game g = fixtures::two_type_binary();
  const CheapTalkValue ct = cheaptalk_max_binary(g, welfare_sum(g));
  CHECK(ct.method == CheapTalkMethod::Exact);
  CHECK(ct.value == Rat(2));

  const Welfare constant{{{Rat(3, 4), Rat(3, 4)}, {Rat(3, 4), Rat(3, 4)}},
                         "file"};
  const CheapTalkValue fixed = cheaptalk_max_binary(g, constant);
  CHECK(fixed.method == CheapTalkMethod::Exact);
  CHECK(fixed.value == Rat(3, 4));
}

TEST_CASE("cheap-talk value falls back to the oracle when not monotone") {
  const Game g = fixtures::two_type_binary();
  const CheapTalkValue ct =
      cheaptalk_max_binary(g, fixtures::binary_example_welfare());
  CHECK(ct.method == CheapTalkMethod::LowerBound);
  CHECK(ct.value == Rat(0));
}

TEST_CASE("exact cheap-talk equals the mediated optimum for linear welfare") {
  fixtures::SplitMix64 rng(0x7ea1u);
  for (int i = 0; i < 30; ++i) {
    const Game g = fixtures::random_binary_game(rng);
    const Rat alpha = fixtures::pick_rational(rng, 4, 4);
    const Rat beta = fixtures::pick_rational(rng, 4, 4);
    Welfare w;
    w.source = "file";
    w.table.resize(g.num_types());
    for (int t = 0; t < g.num_types(); ++t)
      for (int a = 0; a < 2; ++a)
        w.table[t].push_back(alpha * g.sender_utility[t][a] +
                             beta * g.receiver_utility[t][a]);
    CAPTURE(i);
    const CheapTalkValue ct = cheaptalk_max_binary(g, w);
    CHECK(ct.method == CheapTalkMethod::Exact);
    CHECK(ct.value == maximize_welfare(g, w).value);
  }
}

TEST_CASE("non-binary games are rejected across the module") {
  const Game g = fixtures::cyclic_shift();
  CHECK_THROWS_AS(partition_types(g), ValidationError);
  CHECK_THROWS_AS(classify(g), ValidationError);
  CHECK_THROWS_AS(feasible_binary(g, Rat(0), Rat(0)), ValidationError);
  CHECK_THROWS_AS(cheaptalk_max_binary(g, welfare_sum(g)), ValidationError);
}

TEST_CASE("binary analysis serializes its classification") {
  const Game g = fixtures::two_type_binary();
  const Json j = binary_analysis_to_json(g, classify(g));
  CHECK(j["case"] == "aligned");
  CHECK(j["coefficients"]["b0"] == "1/2");
  CHECK(j["coefficients"]["b1"] == "-1/4");
  CHECK(j["partition"]["cell_zero"] == Json::array({"t0"}));
  CHECK(j["region_vertices"].size() == 3);
  CHECK(j["optimal"] == Json::array({"1", "0"}));
}

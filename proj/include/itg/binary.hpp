#pragma once

// Closed-form analysis of binary-action games. Types are split by the
// sender's preferred action (receiver preference breaks sender ties); an
// equilibrium outcome is then a two-value table (p0 on one cell, p1 on the
// other) and the whole equilibrium polytope projects onto a planar region:
// 0 <= p1 <= p0 <= 1 together with one pooled obedience inequality over the
// cell coefficients. Everything downstream (region vertices, optima, the
// exact cheap-talk value) reads off that region.

#include "itg/game.hpp"
#include "itg/json_io.hpp"

#include <utility>
#include <vector>

namespace itg {

struct BinaryPartition {
  std::vector<int> cell_zero;  // sender leans to action 0 (receiver breaks ties)
  std::vector<int> cell_one;
};

// a{action}{cell}: prior-weighted receiver utility of playing `action` on all
// of cell `cell`. b0/b1 are the per-cell advantages of action 0 over action 1.
struct BinaryCoefficients {
  Rat a00, a01, a10, a11;
  Rat b0, b1;
};

enum class BinaryCase {
  Aligned,           // b0 >= 0 and b1 <= 0: a full region, best point (1,0)
  OnlyConstantZero,  // region collapses to (0,0): everyone plays action 1
  OnlyConstantOne,   // region collapses to (1,1): everyone plays action 0
  DiagonalOnly,      // region is the segment p0 == p1
};

const char* to_string(BinaryCase kind);

struct BinaryAnalysis {
  BinaryPartition partition;
  BinaryCoefficients coeffs;
  BinaryCase kind = BinaryCase::Aligned;
  // Hull vertices of the feasible region, counterclockwise from the
  // lexicographically smallest point. Singletons and segments come out as
  // one- and two-point lists.
  std::vector<std::pair<Rat, Rat>> region_vertices;
  // Region optimizer for the default welfare u_s + u_r (always monotone);
  // welfare-specific optima come from optimal_binary_outcome.
  std::pair<Rat, Rat> optimal;
};

// All entry points below require exactly two actions (NotBinary otherwise).
BinaryPartition partition_types(const Game& game);
BinaryCoefficients binary_coefficients(const Game& game,
                                       const BinaryPartition& partition);
BinaryAnalysis classify(const Game& game);

// Membership of (p0, p1) in the feasible region.
bool feasible_binary(const BinaryCoefficients& coeffs, const Rat& p0,
                     const Rat& p1);
bool feasible_binary(const Game& game, const Rat& p0, const Rat& p1);

// The two-value outcome table induced by (p0, p1) on the partition.
Outcome binary_outcome(const Game& game, const Rat& p0, const Rat& p1);

struct BinaryOptimum {
  Rat value;
  Rat p0, p1;
  Outcome outcome;
};

// Welfare-best point of the region for a monotone welfare (NotMonotone
// otherwise). Aligned games peak at (1,0); collapsed regions at their single
// point; on the diagonal segment a one-variable exact LP picks the endpoint
// (ties resolve to the lexicographically smaller point).
BinaryOptimum optimal_binary_outcome(const Game& game, const Welfare& welfare);

enum class CheapTalkMethod { Exact, LowerBound };

struct CheapTalkValue {
  Rat value;
  CheapTalkMethod method = CheapTalkMethod::Exact;
};

// Best one-round cheap-talk welfare. Exact via the region optimum when the
// welfare is monotone; otherwise a certified lower bound from the brute-force
// protocol oracle.
CheapTalkValue cheaptalk_max_binary(const Game& game, const Welfare& welfare);

Json binary_analysis_to_json(const Game& game, const BinaryAnalysis& analysis);

}  // namespace itg

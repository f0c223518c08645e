#pragma once

// Value of mediation: best mediated welfare divided by best one-round
// cheap-talk welfare. The numerator is always the exact LP optimum. The
// denominator is exact for binary games with monotone welfare (closed form),
// taken verbatim from a caller-supplied certified value, or bracketed from
// below by the enumeration oracle and from above by the mediated optimum.
// Ratio conventions: 0/0 = 1 and x/0 = +infinity for x > 0.

#include "itg/game.hpp"
#include "itg/json_io.hpp"

#include <optional>
#include <string>

namespace itg {

// Externally demonstrated cheap-talk value, e.g. a hand-verified argument
// that no informative equilibrium exists. Taken on faith; cite the argument.
struct CertifiedValue {
  Rat value;
  std::string citation;
};

enum class CheapTalkSource { ExactBinary, Certified, OracleBracket };

enum class VomKind { Finite, PlusInfinity, Interval, UnboundedAbove };

struct MediationValue {
  Rat mediated;  // exact LP optimum over the mediated polytope

  CheapTalkSource source = CheapTalkSource::ExactBinary;
  Rat ct_lo;  // cheap-talk value (lo == hi) or bracket endpoints
  Rat ct_hi;
  std::string citation;  // nonempty only for Certified

  VomKind kind = VomKind::Finite;
  Rat lo;  // Finite: lo == hi == ratio; Interval: bounds;
  Rat hi;  // UnboundedAbove: lo is the finite lower end; PlusInfinity: unused
};

MediationValue value_of_mediation(
    const Game& game, const Welfare& welfare,
    const std::optional<CertifiedValue>& certified = std::nullopt);

Json mediation_value_to_json(const MediationValue& value);

}  // namespace itg

#include "itg/vom.hpp"

#include "itg/binary.hpp"
#include "itg/mediated.hpp"
#include "itg/oracle.hpp"

namespace itg {

namespace {

const char* to_string(CheapTalkSource source) {
  switch (source) {
    case CheapTalkSource::ExactBinary: return "exact_binary";
    case CheapTalkSource::Certified: return "certified";
    case CheapTalkSource::OracleBracket: return "oracle_bracket";
  }
  return "unknown";
}

Rat oracle_lower_bound(const Game& game, const Welfare& welfare) {
  const EquilibriumSet set =
      enumerate_equilibria(game, game.num_types() + 1, welfare);
  if (set.members.empty())
    throw InternalError("the babbling equilibrium must always be enumerated");
  Rat best = *set.members.front().welfare;
  for (const EquilibriumRecord& m : set.members)
    if (*m.welfare > best) best = *m.welfare;
  return best;
}

}  // namespace

MediationValue value_of_mediation(const Game& game, const Welfare& welfare,
                                  const std::optional<CertifiedValue>& certified) {
  validate_welfare(game, welfare);

  MediationValue result;
  result.mediated = maximize_welfare(game, welfare).value;

  if (certified) {
    if (certified->value < 0)
      throw ValidationError(ValidationCode::NegativeWelfare,
                            "certified cheap-talk welfare cannot be negative");
    result.source = CheapTalkSource::Certified;
    result.ct_lo = result.ct_hi = certified->value;
    result.citation = certified->citation;
  } else if (game.num_actions() == 2) {
    const CheapTalkValue ct = cheaptalk_max_binary(game, welfare);
    if (ct.method == CheapTalkMethod::Exact) {
      result.source = CheapTalkSource::ExactBinary;
      result.ct_lo = result.ct_hi = ct.value;
    } else {
      result.source = CheapTalkSource::OracleBracket;
      result.ct_lo = ct.value;
      result.ct_hi = result.mediated;  // cheap talk never beats mediation
    }
  } else {
    result.source = CheapTalkSource::OracleBracket;
    result.ct_lo = oracle_lower_bound(game, welfare);
    result.ct_hi = result.mediated;
  }

  if (result.ct_lo == result.ct_hi) {
    const Rat& ct = result.ct_lo;
    if (ct > 0) {
      result.kind = VomKind::Finite;
      result.lo = result.hi = result.mediated / ct;
    } else if (result.mediated > 0) {
      result.kind = VomKind::PlusInfinity;
    } else {
      result.kind = VomKind::Finite;  // 0/0 reads as "mediation adds nothing"
      result.lo = result.hi = 1;
    }
    if (result.source == CheapTalkSource::ExactBinary &&
        result.kind == VomKind::Finite && result.lo < 1)
      throw InternalError(
          "exact cheap-talk optimum exceeded the mediated optimum");
  } else {
    // Bracketed denominator [lo, hi] with hi = mediated optimum; a
    // non-degenerate bracket forces mediated > 0.
    if (result.ct_lo > 0) {
      result.kind = VomKind::Interval;
      result.lo = result.mediated / result.ct_hi;
      result.hi = result.mediated / result.ct_lo;
    } else {
      result.kind = VomKind::UnboundedAbove;
      result.lo = result.mediated / result.ct_hi;
    }
  }
  return result;
}

Json mediation_value_to_json(const MediationValue& value) {
  Json ct;
  ct["source"] = to_string(value.source);
  ct["lo"] = rational_to_json(value.ct_lo);
  ct["hi"] = rational_to_json(value.ct_hi);
  if (!value.citation.empty()) ct["citation"] = value.citation;

  Json ratio;
  switch (value.kind) {
    case VomKind::Finite:
      ratio["kind"] = "finite";
      ratio["value"] = rational_to_json(value.lo);
      break;
    case VomKind::PlusInfinity:
      ratio["kind"] = "plus_infinity";
      break;
    case VomKind::Interval:
      ratio["kind"] = "interval";
      ratio["lo"] = rational_to_json(value.lo);
      ratio["hi"] = rational_to_json(value.hi);
      break;
    case VomKind::UnboundedAbove:
      ratio["kind"] = "unbounded_above";
      ratio["lo"] = rational_to_json(value.lo);
      break;
  }

  Json j;
  j["mediated"] = rational_to_json(value.mediated);
  j["cheap_talk"] = std::move(ct);
  j["value"] = std::move(ratio);
  return j;
}

}  // namespace itg

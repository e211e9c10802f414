#include "subelect/solve.hpp"

#include <stdexcept>

#include "subelect/hard.hpp"
#include "subelect/iso.hpp"

namespace subelect {

bool is_decision_variant(Variant v) {
  switch (v) {
    case Variant::Isomorphism:
    case Variant::SubelectionIso:
    case Variant::CandSubelectionIso:
    case Variant::VoterSubelectionIso:
      return true;
    default:
      return false;
  }
}

SolveOutcome solve(const Election& e1, const Election& e2, Variant variant, const MatchingCase& mc,
                   std::optional<std::int64_t> threshold, SolveMethod method) {
  mc.validate(e1, e2);
  SolveOutcome out;
  if (is_decision_variant(variant)) {
    if (method == SolveMethod::BruteForce)
      throw std::invalid_argument("brute force is available for maximum common variants only");
    switch (variant) {
      case Variant::Isomorphism:
        out.witness = election_isomorphism(e1, e2, mc);
        break;
      case Variant::SubelectionIso:
        out.witness = subelection_isomorphism(e1, e2, mc);
        break;
      case Variant::CandSubelectionIso:
        out.witness = cand_subelection_isomorphism(e1, e2, mc);
        break;
      default:
        out.witness = voter_subelection_isomorphism(e1, e2, mc);
        break;
    }
    out.success = out.witness.has_value();
    return out;
  }

  IsoWitness w;
  if (method == SolveMethod::BruteForce) {
    w = brute_force_max_common(e1, e2, variant, mc);
  } else if (variant == Variant::MaxCommon) {
    w = max_common_subelection(e1, e2, mc);
  } else if (variant == Variant::MaxCommonCand) {
    w = max_common_cand_subelection(e1, e2, mc);
  } else {
    w = max_common_voter_subelection(e1, e2, mc, threshold);
  }
  out.success = !threshold || w.value >= *threshold;
  out.witness = std::move(w);
  return out;
}

}  // namespace subelect

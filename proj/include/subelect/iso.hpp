#pragma once

// Polynomial-time solvers. All of them rest on one observation: once a
// candidate bijection is fixed, two voters can be matched iff their renamed
// votes are equal, and a bijection can be derived from any pair of voters
// that is assumed to be matched.

#include <cstdint>
#include <optional>

#include "subelect/core.hpp"

namespace subelect {

// sigma maps v's rank-i candidate to u's rank-i candidate.
CandidateMatching derive_candidate_bijection(std::span<const Candidate> v, std::span<const Candidate> u);

// Maximum common voter subelection under `mc`. value = number of matched
// voter pairs. Among maximum witnesses the lexicographically smallest voter
// pair list wins (then the smallest sigma). With a threshold, returns the
// first witness whose value reaches it.
IsoWitness max_common_voter_subelection(const Election& e1, const Election& e2, const MatchingCase& mc,
                                        std::optional<std::int64_t> threshold = std::nullopt);

// E1 isomorphic to a voter subelection of E2 (so m1 == m2, n1 <= n2).
std::optional<IsoWitness> voter_subelection_isomorphism(const Election& e1, const Election& e2,
                                                        const MatchingCase& mc);

std::optional<IsoWitness> election_isomorphism(const Election& e1, const Election& e2, const MatchingCase& mc);

// Subelection or Cand.-Subelection isomorphism when sigma, total on E1's
// candidates, is given. `variant` must be SubelectionIso or
// CandSubelectionIso. Throws std::invalid_argument if sigma is not total.
std::optional<IsoWitness> subelection_isomorphism_given_cand_matching(const Election& e1, const Election& e2,
                                                                      const CandidateMatching& sigma,
                                                                      const std::optional<VoterMatching>& pi,
                                                                      Variant variant);

}  // namespace subelect

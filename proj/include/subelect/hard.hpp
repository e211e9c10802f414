#pragma once

// Exact exponential / XP solvers for the NP-hard variants, the conflict
// graph route for common candidate subelections with both matchings, the
// fixed-size approximation, and an exhaustive oracle.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "subelect/core.hpp"
#include "subelect/graph.hpp"

namespace subelect {

// Raised when an exhaustive routine is asked to run beyond its hard limits.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Subelection isomorphism by enumerating injective candidate assignments
// (O*(m2^m1)); each complete assignment is checked with the polynomial
// candidate-matching solver. Cases carrying a candidate matching go
// straight to that solver.
std::optional<IsoWitness> subelection_isomorphism(const Election& e1, const Election& e2, const MatchingCase& mc);
std::optional<IsoWitness> cand_subelection_isomorphism(const Election& e1, const Election& e2,
                                                       const MatchingCase& mc);

// Complete graph on E1's candidates minus every pair {x, y} that some
// matched voter pair orders oppositely after renaming by sigma. Both
// matchings must be total bijections.
Graph build_conflict_graph(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                           const VoterMatching& pi);

// Largest candidate set on which every matched voter pair agrees, via max
// clique of the conflict graph. value = number of candidates kept.
IsoWitness max_common_cand_subelection_both(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                                            const VoterMatching& pi);

// Tries every candidate subset of size min(c, m), then smaller sizes, and
// returns the first feasible one; its size is at least min(c, OPT).
IsoWitness approx_common_cand_both(const Election& e1, const Election& e2, const CandidateMatching& sigma,
                                   const VoterMatching& pi, int c);

// Exact maximum common subelection (value = candidates x voters) and
// maximum common candidate subelection (value = candidates) for every
// matching case. Branch and bound over partial candidate injections;
// throws SizeLimitError when the search exceeds kSearchNodeLimit nodes.
IsoWitness max_common_subelection(const Election& e1, const Election& e2, const MatchingCase& mc);
IsoWitness max_common_cand_subelection(const Election& e1, const Election& e2, const MatchingCase& mc);

inline constexpr std::int64_t kSearchNodeLimit = 20'000'000;

struct BruteForceLimits {
  int max_candidates;
  int max_voters;
};

inline constexpr BruteForceLimits kBruteForceNoMatching{4, 5};
inline constexpr BruteForceLimits kBruteForceVoterMatching{5, 8};
inline constexpr BruteForceLimits kBruteForceCandidateMatching{8, 6};
inline constexpr BruteForceLimits kBruteForceBothMatchings{10, 10};

BruteForceLimits brute_force_limits(CaseKind kind);

// Exhaustive optimum over candidate injections and voter matchings. The
// variant must be MaxCommon, MaxCommonCand or MaxCommonVoter. Throws
// SizeLimitError when either election exceeds brute_force_limits.
IsoWitness brute_force_max_common(const Election& e1, const Election& e2, Variant variant, const MatchingCase& mc);

}  // namespace subelect

#pragma once

// Instance builders that encode Clique into election problems. Vertex sets
// inside a vote are always listed in ascending vertex order.

#include <tuple>

#include "subelect/core.hpp"
#include "subelect/graph.hpp"

namespace subelect {

// Candidates: the vertices of h, then two extra candidates alpha = |V|,
// beta = |V| + 1. For each edge {x, y} (x < y, edges in lexicographic
// order) four voters:
//   x y alpha beta rest,  x y beta alpha rest,
//   y x alpha beta rest,  y x beta alpha rest.
// Throws std::invalid_argument for an edgeless graph.
Election graph_to_election(const Graph& h);

// (E_K, E_G) where K is the complete graph on k vertices. G must have at
// least k vertices and k(k-1)/2 edges, and k >= 2.
std::pair<Election, Election> clique_to_subiso_instance(const Graph& g, int k);

struct CommonCandInstance {
  Election e1;
  Election e2;
  CandidateMatching sigma;
  VoterMatching pi;
};

// Per vertex x, voter x of E1 ranks  M(x) > x > N(x)  and voter x of E2
// ranks  x > M(x) > N(x),  where N(x) are the neighbours of x and M(x) the
// other non-neighbours. Candidate and voter matchings are identities.
CommonCandInstance clique_to_common_cand_instance(const Graph& g);

}  // namespace subelect

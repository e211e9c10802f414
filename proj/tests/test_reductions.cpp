#include <doctest.h>

#include "oracle.hpp"
#include "subelect/hard.hpp"
#include "subelect/reductions.hpp"

using namespace subelect;

namespace {
using Pairs = std::vector<std::pair<int, int>>;
}

TEST_CASE("graph to election") {
  // Single edge {0, 1} on three vertices: alpha = 3, beta = 4.
  const Election e = graph_to_election(Graph::from_edges(3, Pairs{{0, 1}}));
  CHECK(e.num_candidates() == 5);
  CHECK(e.votes() == std::vector<Vote>{{0, 1, 3, 4, 2}, {0, 1, 4, 3, 2}, {1, 0, 3, 4, 2}, {1, 0, 4, 3, 2}});
  const Graph tri = Graph::complete(3);
  const Election t = graph_to_election(tri);
  CHECK(t.num_voters() == 12);
  CHECK(t.vote(4) == Vote{0, 2, 3, 4, 1});
  CHECK_THROWS_AS(graph_to_election(Graph(3)), std::invalid_argument);
}

TEST_CASE("clique to subelection isomorphism instance") {
  const Graph g = Graph::from_edges(4, Pairs{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const auto [ek, eg] = clique_to_subiso_instance(g, 3);
  CHECK(ek == graph_to_election(Graph::complete(3)));
  CHECK(eg == graph_to_election(g));
  CHECK_THROWS_AS(clique_to_subiso_instance(g, 1), std::invalid_argument);
  CHECK_THROWS_AS(clique_to_subiso_instance(g, 5), std::invalid_argument);
  CHECK_THROWS_AS(clique_to_subiso_instance(Graph::from_edges(4, Pairs{{0, 1}, {2, 3}}), 3), std::invalid_argument);
}

TEST_CASE("clique round trip through subelection isomorphism") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = oracle::uniform_int(rng, 3, 5);
    const Graph g = oracle::random_graph(rng, n, 0.6);
    const int k = 3;
    if (g.num_edges() < 3) continue;
    const auto [ek, eg] = clique_to_subiso_instance(g, k);
    CHECK(subelection_isomorphism(ek, eg, MatchingCase::none()).has_value() == (oracle::clique_number(g) >= k));
  }
}

TEST_CASE("clique to common candidate subelection instance") {
  // Path 0 - 1 - 2.
  const CommonCandInstance inst = clique_to_common_cand_instance(Graph::from_edges(3, Pairs{{0, 1}, {1, 2}}));
  CHECK(inst.e1.votes() == std::vector<Vote>{{2, 0, 1}, {1, 0, 2}, {0, 2, 1}});
  CHECK(inst.e2.votes() == std::vector<Vote>{{0, 2, 1}, {1, 0, 2}, {2, 0, 1}});
  CHECK(inst.sigma == CandidateMatching::identity(3));
  CHECK(inst.pi == VoterMatching::identity(3));
  CHECK_THROWS_AS(clique_to_common_cand_instance(Graph(0)), std::invalid_argument);

  oracle::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, oracle::uniform_int(rng, 1, 8), 0.5);
    const auto c = clique_to_common_cand_instance(g);
    CHECK(max_common_cand_subelection_both(c.e1, c.e2, c.sigma, c.pi).value == oracle::clique_number(g));
  }
}

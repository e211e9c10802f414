#include <doctest.h>

#include "oracle.hpp"
#include "subelect/matching.hpp"

using namespace subelect;

TEST_CASE("bipartite graph construction") {
  CHECK_THROWS_AS(BipartiteGraph(2, std::vector<std::vector<int>>{{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph(2, std::vector<std::vector<int>>{{1, 1}}), std::invalid_argument);
  const BipartiteGraph g(3, {{2, 0}, {}, {1}});
  CHECK(g.left_size() == 3);
  CHECK(g.right_size() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(std::vector<int>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<int>{0, 2});

  BipartiteGraph h;
  h.reset(2);
  h.begin_left_vertex();
  h.add_neighbor(1);
  h.begin_left_vertex();
  CHECK(h.left_size() == 2);
  CHECK(h.neighbors(1).empty());
}

TEST_CASE("hopcroft-karp small cases") {
  CHECK(max_bipartite_matching(BipartiteGraph(0, 0)).size == 0);
  const BipartiteGraph g(3, {{0, 1}, {0}, {1, 2}});
  const BipartiteMatching r = max_bipartite_matching(g);
  CHECK(r.size == 3);
  CHECK(r.pairs == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 2}});
}

TEST_CASE("hopcroft-karp agrees with augmenting paths") {
  oracle::Rng rng(5);
  BipartiteMatcher matcher;
  for (int trial = 0; trial < 300; ++trial) {
    const int left = oracle::uniform_int(rng, 0, 12), right = oracle::uniform_int(rng, 0, 12);
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
    std::bernoulli_distribution coin(p);
    for (auto& row : adj)
      for (int r = 0; r < right; ++r)
        if (coin(rng)) row.push_back(r);
    const BipartiteGraph g(right, adj);
    const BipartiteMatching m = matcher.solve(g);
    CHECK(m.size == oracle::kuhn_matching(left, right, adj));
    CHECK(matcher.solve_size(g) == m.size);
    CHECK(static_cast<int>(m.pairs.size()) == m.size);
    std::vector<char> used(static_cast<std::size_t>(right), 0);
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
      auto [l, r] = m.pairs[i];
      CHECK(std::find(adj[l].begin(), adj[l].end(), r) != adj[l].end());
      CHECK_FALSE(used[r]);
      used[r] = 1;
      if (i) CHECK(m.pairs[i - 1].first < l);
    }
  }
}

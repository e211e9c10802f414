#include "subelect/reductions.hpp"

#include <stdexcept>

namespace subelect {

Election graph_to_election(const Graph& h) {
  const auto edges = h.edges();
  if (edges.empty()) throw std::invalid_argument("graph_to_election: graph has no edges");
  const int n = h.num_vertices();
  const int alpha = n, beta = n + 1;
  std::vector<Vote> votes;
  votes.reserve(edges.size() * 4);
  for (auto [x, y] : edges) {
    Vote rest;
    for (int z = 0; z < n; ++z)
      if (z != x && z != y) rest.push_back(z);
    for (auto [first, second] : {std::pair{x, y}, std::pair{y, x}}) {
      for (auto [third, fourth] : {std::pair{alpha, beta}, std::pair{beta, alpha}}) {
        Vote v{first, second, third, fourth};
        v.insert(v.end(), rest.begin(), rest.end());
        votes.push_back(std::move(v));
      }
    }
  }
  return Election(n + 2, std::move(votes));
}

std::pair<Election, Election> clique_to_subiso_instance(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("clique_to_subiso_instance: k must be at least 2");
  if (g.num_vertices() < k || g.num_edges() < k * (k - 1) / 2)
    throw std::invalid_argument("clique_to_subiso_instance: graph needs at least k vertices and k(k-1)/2 edges");
  return {graph_to_election(Graph::complete(k)), graph_to_election(g)};
}

CommonCandInstance clique_to_common_cand_instance(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("clique_to_common_cand_instance: graph has no vertices");
  std::vector<Vote> first, second;
  for (int x = 0; x < n; ++x) {
    Vote non_neighbours, neighbours;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      (g.adjacent(x, y) ? neighbours : non_neighbours).push_back(y);
    }
    Vote v1 = non_neighbours;
    v1.push_back(x);
    v1.insert(v1.end(), neighbours.begin(), neighbours.end());
    Vote v2{x};
    v2.insert(v2.end(), non_neighbours.begin(), non_neighbours.end());
    v2.insert(v2.end(), neighbours.begin(), neighbours.end());
    first.push_back(std::move(v1));
    second.push_back(std::move(v2));
  }
  return {Election(n, std::move(first)), Election(n, std::move(second)), CandidateMatching::identity(n),
          VoterMatching::identity(n)};
}

}  // namespace subelect

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <span>
#include <utility>
#include <vector>

namespace subelect {

using VertexSet = boost::dynamic_bitset<>;

// Simple undirected graph with bitset adjacency; no self-loops.
class Graph {
 public:
  explicit Graph(int num_vertices = 0);
  static Graph complete(int num_vertices);
  static Graph from_edges(int num_vertices, std::span<const std::pair<int, int>> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool adjacent(int a, int b) const { return adj_[a].test(b); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  // Edges as (a, b) with a < b, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(int a, int b) const;
  std::vector<VertexSet> adj_;
};

// Exact maximum clique (branch and bound with greedy colouring bounds). The
// result is the lexicographically smallest maximum clique, sorted.
std::vector<int> max_clique(const Graph& g);

// Size of a maximum clique inside the vertex set `within`.
int max_clique_size(const Graph& g, const VertexSet& within);

}  // namespace subelect

#pragma once

#include <span>
#include <utility>
#include <vector>

namespace subelect {

// Bipartite graph in compressed adjacency form. Neighbors of each left
// vertex are sorted and duplicate-free.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_size, int right_size);
  // Validates the lists and stores them sorted.
  BipartiteGraph(int right_size, const std::vector<std::vector<int>>& adjacency);

  // Incremental construction: left vertices are added in order.
  void reset(int right_size);
  void begin_left_vertex() { offsets_.push_back(offsets_.back()); }
  // Neighbors of the current left vertex must be appended in increasing order.
  void add_neighbor(int right) {
    targets_.push_back(right);
    ++offsets_.back();
  }

  int left_size() const { return static_cast<int>(offsets_.size()) - 1; }
  int right_size() const { return right_; }
  std::span<const int> neighbors(int left) const {
    return {targets_.data() + offsets_[left], static_cast<std::size_t>(offsets_[left + 1] - offsets_[left])};
  }
  std::size_t num_edges() const { return targets_.size(); }

 private:
  int right_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> targets_;
};

struct BipartiteMatching {
  int size = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted by left vertex
};

// Hopcroft-Karp. Reuses its buffers across calls; the result is a
// deterministic function of the graph, with free left vertices tried in
// increasing order and neighbors in increasing order.
class BipartiteMatcher {
 public:
  BipartiteMatching solve(const BipartiteGraph& g);
  int solve_size(const BipartiteGraph& g);

 private:
  bool bfs(const BipartiteGraph& g);
  bool dfs(const BipartiteGraph& g, int left);

  std::vector<int> match_left_, match_right_, dist_, queue_, next_edge_;
};

BipartiteMatching max_bipartite_matching(const BipartiteGraph& g);

}  // namespace subelect

#include "subelect/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace subelect {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteGraph::BipartiteGraph(int left_size, int right_size) : right_(right_size) {
  if (left_size < 0 || right_size < 0) throw std::invalid_argument("negative bipartite graph size");
  offsets_.assign(static_cast<std::size_t>(left_size) + 1, 0);
}

BipartiteGraph::BipartiteGraph(int right_size, const std::vector<std::vector<int>>& adjacency) {
  if (right_size < 0) throw std::invalid_argument("negative bipartite graph size");
  reset(right_size);
  for (const auto& list : adjacency) {
    std::vector<int> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate neighbor in bipartite adjacency");
    begin_left_vertex();
    for (int r : sorted) {
      if (r < 0 || r >= right_size) throw std::invalid_argument("bipartite neighbor out of range");
      add_neighbor(r);
    }
  }
}

void BipartiteGraph::reset(int right_size) {
  right_ = right_size;
  offsets_.assign(1, 0);
  targets_.clear();
}

bool BipartiteMatcher::bfs(const BipartiteGraph& g) {
  const int n = g.left_size();
  queue_.clear();
  bool found = false;
  for (int l = 0; l < n; ++l) {
    if (match_left_[l] < 0) {
      dist_[l] = 0;
      queue_.push_back(l);
    } else {
      dist_[l] = kInf;
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const int l = queue_[head];
    for (int r : g.neighbors(l)) {
      const int next = match_right_[r];
      if (next < 0) {
        found = true;
      } else if (dist_[next] == kInf) {
        dist_[next] = dist_[l] + 1;
        queue_.push_back(next);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(const BipartiteGraph& g, int left) {
  auto nbrs = g.neighbors(left);
  for (int& i = next_edge_[left]; i < static_cast<int>(nbrs.size()); ++i) {
    const int r = nbrs[i];
    const int next = match_right_[r];
    if (next < 0 || (dist_[next] == dist_[left] + 1 && dfs(g, next))) {
      match_left_[left] = r;
      match_right_[r] = left;
      ++i;
      return true;
    }
  }
  dist_[left] = kInf;
  return false;
}

int BipartiteMatcher::solve_size(const BipartiteGraph& g) {
  const int n = g.left_size();
  match_left_.assign(static_cast<std::size_t>(n), -1);
  match_right_.assign(static_cast<std::size_t>(g.right_size()), -1);
  dist_.assign(static_cast<std::size_t>(n), kInf);
  next_edge_.assign(static_cast<std::size_t>(n), 0);
  int size = 0;
  while (bfs(g)) {
    std::fill(next_edge_.begin(), next_edge_.end(), 0);
    for (int l = 0; l < n; ++l)
      if (match_left_[l] < 0 && dfs(g, l)) ++size;
  }
  return size;
}

BipartiteMatching BipartiteMatcher::solve(const BipartiteGraph& g) {
  BipartiteMatching result;
  result.size = solve_size(g);
  result.pairs.reserve(static_cast<std::size_t>(result.size));
  for (int l = 0; l < g.left_size(); ++l)
    if (match_left_[l] >= 0) result.pairs.emplace_back(l, match_left_[l]);
  return result;
}

BipartiteMatching max_bipartite_matching(const BipartiteGraph& g) {
  BipartiteMatcher matcher;
  return matcher.solve(g);
}

}  // namespace subelect

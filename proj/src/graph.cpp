#include "subelect/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subelect {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(num_vertices), VertexSet(static_cast<std::size_t>(num_vertices)));
}

Graph Graph::complete(int num_vertices) {
  Graph g(num_vertices);
  for (int v = 0; v < num_vertices; ++v) {
    g.adj_[v].set();
    g.adj_[v].reset(v);
  }
  return g;
}

Graph Graph::from_edges(int num_vertices, std::span<const std::pair<int, int>> edges) {
  Graph g(num_vertices);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::check(int a, int b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
    throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range");
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
}

void Graph::add_edge(int a, int b) {
  check(a, b);
  adj_[a].set(b);
  adj_[b].set(a);
}

void Graph::remove_edge(int a, int b) {
  check(a, b);
  adj_[a].reset(b);
  adj_[b].reset(a);
}

int Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_vertices(); ++a)
    for (auto b = adj_[a].find_next(a); b != VertexSet::npos; b = adj_[a].find_next(b))
      out.emplace_back(a, static_cast<int>(b));
  return out;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  // Largest clique size in `p`, stopping early once `stop_at` is reached.
  int run(const VertexSet& p, int stop_at) {
    best_ = 0;
    stop_at_ = stop_at;
    if (p.any()) expand(0, p);
    return best_;
  }

 private:
  // Greedy sequential colouring of p; vertices come out in non-decreasing
  // colour order together with their colour (an upper bound on the clique
  // size reachable from that prefix).
  void colour(const VertexSet& p, std::vector<int>& order, std::vector<int>& bound) const {
    VertexSet uncoloured = p;
    int colour_id = 0;
    while (uncoloured.any()) {
      ++colour_id;
      VertexSet available = uncoloured;
      for (auto v = available.find_first(); v != VertexSet::npos; v = available.find_next(v)) {
        available -= g_.neighbors(static_cast<int>(v));
        uncoloured.reset(v);
        order.push_back(static_cast<int>(v));
        bound.push_back(colour_id);
      }
    }
  }

  void expand(int depth, VertexSet p) {
    std::vector<int> order, bound;
    colour(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (depth + bound[i] <= best_ || best_ >= stop_at_) return;
      const int v = order[i];
      VertexSet next = p & g_.neighbors(v);
      if (next.none()) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(depth + 1, std::move(next));
      }
      p.reset(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
  int stop_at_ = 0;
};

}  // namespace

int max_clique_size(const Graph& g, const VertexSet& within) {
  CliqueSearch search(g);
  return search.run(within, g.num_vertices() + 1);
}

std::vector<int> max_clique(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> chosen;
  if (n == 0) return chosen;
  VertexSet all(static_cast<std::size_t>(n));
  all.set();
  CliqueSearch search(g);
  const int omega = search.run(all, n + 1);

  // Fix vertices greedily in increasing order, keeping only choices that
  // still extend to a clique of size omega.
  VertexSet p = all;
  while (static_cast<int>(chosen.size()) < omega) {
    const int need = omega - static_cast<int>(chosen.size()) - 1;
    bool extended = false;
    for (auto v = p.find_first(); v != VertexSet::npos; v = p.find_next(v)) {
      VertexSet rest = p & g.neighbors(static_cast<int>(v));
      for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
      if (need == 0 || search.run(rest, need) >= need) {
        chosen.push_back(static_cast<int>(v));
        p = std::move(rest);
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("max_clique: inconsistent clique bound");
  }
  return chosen;
}

}  // namespace subelect

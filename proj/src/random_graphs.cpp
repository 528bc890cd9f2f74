#include "sclkit/random_graphs.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace sclkit::hypgraph {

FiniteMetricGraph random_tree(std::mt19937_64& rng, int n, int attach_window) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    int lo = 0;
    if (attach_window > 0) lo = std::max(0, i - attach_window);
    std::uniform_int_distribution<int> pick(lo, i - 1);
    edges.emplace_back(pick(rng), i);
  }
  return FiniteMetricGraph(n, edges);
}

FiniteMetricGraph random_quasi_tree(std::mt19937_64& rng, const QuasiTreeParams& params) {
  if (params.chord_span < 2 && params.extra_edges > 0)
    throw std::invalid_argument("random_quasi_tree: chord_span must be >= 2");
  FiniteMetricGraph tree = random_tree(rng, params.n, params.attach_window);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < tree.vertex_count(); ++u)
    for (int v : tree.neighbors(u))
      if (u < v) edges.emplace_back(u, v);

  std::set<std::pair<int, int>> have(edges.begin(), edges.end());
  std::uniform_int_distribution<int> pick_vertex(0, params.n - 1);
  int added = 0;
  int attempts = 0;
  const int max_attempts = 200 * std::max(1, params.extra_edges);
  while (added < params.extra_edges && attempts < max_attempts) {
    ++attempts;
    int u = pick_vertex(rng);
    // BFS out to chord_span and collect candidates at distance >= 2.
    std::vector<int> dist(params.n, -1);
    std::vector<int> candidates;
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (dist[x] >= 2) candidates.push_back(x);
      if (dist[x] == params.chord_span) continue;
      for (int y : tree.neighbors(x))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    if (candidates.empty()) continue;
    std::uniform_int_distribution<size_t> pick_cand(0, candidates.size() - 1);
    int v = candidates[pick_cand(rng)];
    auto key = std::minmax(u, v);
    if (have.count({key.first, key.second})) continue;
    have.insert({key.first, key.second});
    edges.emplace_back(key.first, key.second);
    ++added;
  }
  return FiniteMetricGraph(params.n, edges);
}

}  // namespace sclkit::hypgraph

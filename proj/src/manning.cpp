#include "sclkit/manning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sclkit::hypgraph {

TreeQuotient manning_tree(const FiniteMetricGraph& g, int bottleneck_delta, int base) {
  if (bottleneck_delta < 1)
    throw std::invalid_argument("manning_tree: delta must be >= 1 (clamp the bottleneck constant)");
  if (base < 0 || base >= g.vertex_count())
    throw std::invalid_argument("manning_tree: base vertex out of range");
  if (!g.connected()) throw std::invalid_argument("manning_tree: graph disconnected");

  int n = g.vertex_count();
  int R = 20 * bottleneck_delta;
  auto dist = g.bfs_distances(base);

  // Annulus index: level 1 is the closed R-ball, level j>1 is ((j-1)R, jR].
  auto annulus = [&](int v) {
    int d = dist[static_cast<size_t>(v)];
    return d == 0 ? 1 : (d + R - 1) / R;
  };

  // Path components of each annulus (over the induced subgraph).
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int comp_count = 0;
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    int lvl = annulus(s);
    comp[static_cast<size_t>(s)] = comp_count;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u))
        if (comp[static_cast<size_t>(v)] == -1 && annulus(v) == lvl) {
          comp[static_cast<size_t>(v)] = comp_count;
          queue.push_back(v);
        }
    }
    ++comp_count;
  }

  std::vector<int> level(static_cast<size_t>(comp_count), 0);
  std::vector<int> beta(static_cast<size_t>(comp_count), -1);
  for (int v = 0; v < n; ++v) {
    int c = comp[static_cast<size_t>(v)];
    level[static_cast<size_t>(c)] = annulus(v);
    int& gate = beta[static_cast<size_t>(c)];
    if (gate == -1 || dist[static_cast<size_t>(v)] < dist[static_cast<size_t>(gate)] ||
        (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(gate)] && v < gate))
      gate = v;
  }

  // Quotient edges cross consecutive annuli. Tree-ness is exactly: every
  // component above level 1 descends to a single lower component.
  std::map<std::pair<int, int>, std::pair<int, int>> down_edge;  // (upper,lower) -> graph edge
  std::set<std::pair<int, int>> tree_edges;
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      int cu = comp[static_cast<size_t>(u)], cv = comp[static_cast<size_t>(v)];
      if (cu == cv) continue;
      int upper = cu, lower = cv, gu = u, gv = v;
      if (level[static_cast<size_t>(cu)] < level[static_cast<size_t>(cv)]) {
        std::swap(upper, lower);
        std::swap(gu, gv);
      }
      down_edge.emplace(std::make_pair(upper, lower), std::make_pair(gu, gv));
      tree_edges.insert({std::min(cu, cv), std::max(cu, cv)});
    }
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> down_by_comp(
      static_cast<size_t>(comp_count));
  for (const auto& [key, ge] : down_edge)
    down_by_comp[static_cast<size_t>(key.first)].push_back({key.second, ge});
  for (int c = 0; c < comp_count; ++c) {
    auto& downs = down_by_comp[static_cast<size_t>(c)];
    if (downs.size() > 1) {
      QuotientCycleWitness w;
      w.component = c;
      w.parent_a = downs[0].first;
      w.parent_b = downs[1].first;
      w.edge_a = downs[0].second;
      w.edge_b = downs[1].second;
      throw NotATreeError(
          w, "annulus quotient is not a tree: component " + std::to_string(c) +
                 " meets two lower components (" + std::to_string(w.parent_a) + ", " +
                 std::to_string(w.parent_b) + "); the bottleneck property fails at delta = " +
                 std::to_string(bottleneck_delta));
    }
  }

  std::vector<std::pair<int, int>> edges(tree_edges.begin(), tree_edges.end());
  TreeQuotient tq{FiniteMetricGraph(comp_count, edges), std::move(comp), std::move(beta),
                  std::move(level), R, bottleneck_delta, base};
  // Structural confirmation; the per-component check above already implies it.
  if (tq.tree.edge_count() != comp_count - 1)
    throw std::logic_error("manning_tree: edge count does not match a tree");
  return tq;
}

ManningCheck verify_manning_inequalities(const FiniteMetricGraph& g, const TreeQuotient& tq) {
  ManningCheck chk;
  int t = tq.tree.vertex_count();
  int D = tq.delta_used;
  bool first = true;
  // Tree distances via BFS per tree vertex; gate distances via BFS per gate.
  for (int x = 0; x < t; ++x) {
    auto dt = tq.tree.bfs_distances(x);
    auto dq = g.bfs_distances(tq.beta[static_cast<size_t>(x)]);
    for (int y = x + 1; y < t; ++y) {
      int d_t = dt[static_cast<size_t>(y)];
      int d_q = dq[static_cast<size_t>(tq.beta[static_cast<size_t>(y)])];
      int lower_margin = d_q - (8 * D * d_t - 16 * D);
      int upper_margin = 26 * D * d_t - d_q;
      if (first) {
        chk.worst_lower_margin = lower_margin;
        chk.worst_upper_margin = upper_margin;
        first = false;
      } else {
        chk.worst_lower_margin = std::min(chk.worst_lower_margin, lower_margin);
        chk.worst_upper_margin = std::min(chk.worst_upper_margin, upper_margin);
      }
      if (lower_margin < 0 || upper_margin < 0) {
        chk.ok = false;
        if (!chk.violating_pair) chk.violating_pair = {x, y};
      }
      ++chk.pairs_checked;
    }
  }
  return chk;
}

QuasiGeodesicCheck quasigeodesic_image_check(const FiniteMetricGraph& g, const TreeQuotient& tq,
                                             const std::vector<int>& path, int additive) {
  QuasiGeodesicCheck chk;
  if (path.empty()) throw std::invalid_argument("quasigeodesic_image_check: empty path");
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& nb = g.neighbors(path[i]);
    if (path[i + 1] != path[i] && !std::binary_search(nb.begin(), nb.end(), path[i + 1]))
      throw std::invalid_argument("path step " + std::to_string(i) + " is not an edge");
  }

  // (2, additive) lower quasi-geodesic bound: |i - j| <= 2 d(p_i, p_j) + additive.
  // (The upper bound d <= |i - j| holds for any edge walk.)
  for (size_t i = 0; i < path.size() && chk.is_quasigeodesic; ++i) {
    auto d = g.bfs_distances(path[i]);
    for (size_t j = i + 1; j < path.size(); ++j) {
      long long gap = static_cast<long long>(j - i);
      if (gap > 2ll * d[static_cast<size_t>(path[j])] + additive) {
        chk.is_quasigeodesic = false;
        chk.violation = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
    }
  }
  if (!chk.is_quasigeodesic) return chk;

  // Distance of each image vertex from the tree geodesic between the image
  // endpoints (tree geodesics are unique).
  auto geod = tq.tree.canonical_geodesic(tq.alpha[static_cast<size_t>(path.front())],
                                         tq.alpha[static_cast<size_t>(path.back())]);
  std::vector<char> on_geod(static_cast<size_t>(tq.tree.vertex_count()), 0);
  for (int v : geod) on_geod[static_cast<size_t>(v)] = 1;
  // Multi-source BFS from the geodesic measures distance-to-geodesic.
  std::vector<int> dist_to(static_cast<size_t>(tq.tree.vertex_count()), -1);
  std::deque<int> queue;
  for (int v : geod) {
    dist_to[static_cast<size_t>(v)] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : tq.tree.neighbors(u))
      if (dist_to[static_cast<size_t>(v)] == -1) {
        dist_to[static_cast<size_t>(v)] = dist_to[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  for (int p : path)
    chk.epsilon = std::max(chk.epsilon, dist_to[static_cast<size_t>(tq.alpha[static_cast<size_t>(p)])]);
  return chk;
}

}  // namespace sclkit::hypgraph

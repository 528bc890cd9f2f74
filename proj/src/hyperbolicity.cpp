#include "sclkit/hyperbolicity.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace sclkit::hypgraph {

namespace {

// Doubled four-point defect of one quadruple given the three pairing sums.
inline int pairing_defect(int a, int b, int c) {
  int hi = std::max(a, std::max(b, c));
  int mid = a + b + c - hi - std::min(a, std::min(b, c));
  return hi - mid;
}

}  // namespace

DeltaResult hyperbolicity_delta(const FiniteMetricGraph& g, DeltaOptions opts) {
  if (!g.connected()) throw std::invalid_argument("hyperbolicity_delta: graph disconnected");
  int n = g.vertex_count();
  DeltaResult res;
  if (n <= opts.exact_cap) {
    g.ensure_distance_cache();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        int dxy = g.distance(x, y);
        for (int z = y + 1; z < n; ++z) {
          int dxz = g.distance(x, z), dyz = g.distance(y, z);
          for (int w = z + 1; w < n; ++w) {
            int s1 = dxy + g.distance(z, w);
            int s2 = dxz + g.distance(y, w);
            int s3 = g.distance(x, w) + dyz;
            res.doubled = std::max(res.doubled, pairing_defect(s1, s2, s3));
            ++res.quadruples_scanned;
          }
        }
      }
    res.exact = true;
    return res;
  }

  // Sampled mode: BFS per distinct sampled source, batched by source reuse.
  res.exact = false;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int kBatch = 64;  // quadruples drawn per BFS pair
  long long remaining = opts.samples;
  while (remaining > 0) {
    int x = pick(rng), y = pick(rng);
    auto dx = g.bfs_distances(x);
    auto dy = g.bfs_distances(y);
    for (int b = 0; b < kBatch && remaining > 0; ++b, --remaining) {
      int z = pick(rng), w = pick(rng);
      auto dz = g.bfs_distances(z);  // one more BFS per quadruple pair batch half
      int s1 = dx[static_cast<size_t>(y)] + dz[static_cast<size_t>(w)];
      int s2 = dx[static_cast<size_t>(z)] + dy[static_cast<size_t>(w)];
      int s3 = dx[static_cast<size_t>(w)] + dy[static_cast<size_t>(z)];
      res.doubled = std::max(res.doubled, pairing_defect(s1, s2, s3));
      ++res.quadruples_scanned;
    }
  }
  return res;
}

namespace {

// Component labels of the graph with the closed `delta`-ball around `center`
// removed; removed vertices get label -1. Labels count from 0.
void components_without_ball(const FiniteMetricGraph& g, int center, int delta,
                             std::vector<int32_t>& label, std::deque<int>& scratch) {
  int n = g.vertex_count();
  label.assign(static_cast<size_t>(n), -2);  // -2 unvisited, -1 removed
  // Mark the closed ball via truncated BFS.
  scratch.clear();
  scratch.push_back(center);
  label[static_cast<size_t>(center)] = -1;
  std::vector<int> depth(static_cast<size_t>(n), -1);
  depth[static_cast<size_t>(center)] = 0;
  while (!scratch.empty()) {
    int u = scratch.front();
    scratch.pop_front();
    if (depth[static_cast<size_t>(u)] == delta) continue;
    for (int v : g.neighbors(u))
      if (depth[static_cast<size_t>(v)] == -1) {
        depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
        label[static_cast<size_t>(v)] = -1;
        scratch.push_back(v);
      }
  }
  int32_t next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<size_t>(s)] != -2) continue;
    label[static_cast<size_t>(s)] = next;
    scratch.clear();
    scratch.push_back(s);
    while (!scratch.empty()) {
      int u = scratch.front();
      scratch.pop_front();
      for (int v : g.neighbors(u))
        if (label[static_cast<size_t>(v)] == -2) {
          label[static_cast<size_t>(v)] = next;
          scratch.push_back(v);
        }
    }
    ++next;
  }
}

// Checks the separation property at level `delta` for all pairs whose
// canonical source is in `roots`. comp[v] holds component labels of
// G - B(v, delta) for every v.
bool feasible_at_level(const FiniteMetricGraph& g, int delta,
                       const std::vector<std::vector<int32_t>>& comp,
                       const std::vector<int>& roots, bool all_roots) {
  int n = g.vertex_count();
  std::vector<int> order;  // DFS over the canonical BFS tree
  order.reserve(static_cast<size_t>(n));
  std::vector<std::vector<int>> children(static_cast<size_t>(n));
  std::vector<int> anc;  // ancestor at each depth along the current DFS path
  for (int s : roots) {
    auto dist = g.bfs_distances(s);
    auto parent = g.canonical_parents(s);
    for (auto& c : children) c.clear();
    for (int u = 0; u < n; ++u)
      if (parent[static_cast<size_t>(u)] != -1)
        children[static_cast<size_t>(parent[static_cast<size_t>(u)])].push_back(u);

    // Iterative DFS carrying the ancestor-at-depth table.
    struct Frame {
      int v;
      size_t next_child = 0;
    };
    std::vector<Frame> stack{{s}};
    anc.assign(1, s);
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      int dv = dist[static_cast<size_t>(v)];
      if (f.next_child == 0 && (all_roots ? v > s : v != s)) {
        // Check pair (s, v): separators are ancestors at depth in
        // (delta, dv - delta).
        const auto& comp_row_ok = comp;
        for (int d = delta + 1; d < dv - delta; ++d) {
          int sep = anc[static_cast<size_t>(d)];
          const auto& lab = comp_row_ok[static_cast<size_t>(sep)];
          if (lab[static_cast<size_t>(s)] == lab[static_cast<size_t>(v)]) return false;
        }
      }
      if (f.next_child < children[static_cast<size_t>(v)].size()) {
        int c = children[static_cast<size_t>(v)][f.next_child++];
        stack.push_back({c});
        if (static_cast<size_t>(dist[static_cast<size_t>(c)]) >= anc.size())
          anc.resize(static_cast<size_t>(dist[static_cast<size_t>(c)]) + 1);
        anc[static_cast<size_t>(dist[static_cast<size_t>(c)])] = c;
      } else {
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

BottleneckResult bottleneck_constant(const FiniteMetricGraph& g, BottleneckOptions opts) {
  if (!g.connected()) throw std::invalid_argument("bottleneck_constant: graph disconnected");
  int n = g.vertex_count();
  BottleneckResult res;

  std::vector<int> roots;
  bool all_roots = n <= opts.exact_cap;
  if (all_roots) {
    roots.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = i;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < opts.sample_roots; ++i) roots.push_back(pick(rng));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    res.exact = false;
  }

  std::vector<std::vector<int32_t>> comp(static_cast<size_t>(n));
  std::deque<int> scratch;
  for (int delta = 0; delta <= opts.max_delta; ++delta) {
    for (int v = 0; v < n; ++v)
      components_without_ball(g, v, delta, comp[static_cast<size_t>(v)], scratch);
    if (feasible_at_level(g, delta, comp, roots, all_roots)) {
      res.delta = delta;
      return res;
    }
  }
  throw std::runtime_error("bottleneck_constant: exceeded max_delta safety stop");
}

}  // namespace sclkit::hypgraph
